#include "rootcluster/report.hpp"

#include <sstream>

namespace rootcluster::report {

using nlohmann::json;

namespace {

std::string cell(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  if (value.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i) out += ' ';
      out += value[i].is_array() ? "[" + cell(value[i]) + "]" : cell(value[i]);
    }
    return out;
  }
  return value.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> columns_of(const json& rows) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    if (!row.is_object()) return {"value"};
    for (const auto& [key, _] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  return columns;
}

std::string field(const json& row, const std::string& column) {
  if (!row.is_object()) return cell(row);
  return row.contains(column) ? cell(row.at(column)) : "";
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

json model_json(const GaloisModel& model) {
  return {{"family", model.family().describe()},
          {"n", model.n()},
          {"order", model.group().order()},
          {"transitive", is_transitive(model.group())},
          {"faithful", is_faithful(model.group())},
          {"root_meaning", model.root_meaning()}};
}

json perm_json(const GaloisModel& model, const Perm& p) {
  json out = {{"images", std::vector<Label>(p.images().begin(), p.images().end())}};
  if (auto label = model.affine_label(p)) out["affine"] = {label->alpha, label->u};
  return out;
}

json partition_json(const ClusterPartition& partition) {
  return {{"clusters", partition.clusters},
          {"cluster_size", partition.r},
          {"cluster_count", partition.s},
          {"representatives", representatives(partition)}};
}

json genset_json(const GaloisModel& model, const GenSetReport& report) {
  json out = {{"roots", report.roots},
              {"generates", report.generates},
              {"minimal", report.minimal},
              {"residual_witness", nullptr},
              {"removable_root", nullptr}};
  if (report.residual_witness) out["residual_witness"] = perm_json(model, *report.residual_witness);
  if (report.removable_root) out["removable_root"] = *report.removable_root;
  return out;
}

json tower_json(const GaloisModel& model, const Tower& tower) {
  std::vector<std::size_t> orders;
  std::vector<std::size_t> capacities;
  for (const auto& h : tower.distinct_fields) {
    orders.push_back(h.order());
    capacities.push_back(root_capacity(model, h));
  }
  json out = {{"ordering", tower.ordering},
              {"length", tower.length()},
              {"degree_sequence", tower.degree_sequence},
              {"subgroup_orders", orders},
              {"root_capacities", capacities},
              {"terminates_at_splitting_field", tower.terminates},
              {"residual_witness", nullptr}};
  if (tower.residual_witness) out["residual_witness"] = perm_json(model, *tower.residual_witness);
  return out;
}

json theorem_json(const TheoremReport& report) {
  return {{"id", report.id},
          {"parameters", report.parameters.to_json()},
          {"claimed", report.claimed},
          {"observed", report.observed},
          {"details", report.details},
          {"status", to_string(report.status)},
          {"budget_exceeded", report.budget_exceeded},
          {"skip_reason", report.skip_reason},
          {"elapsed_ms", report.elapsed.count()}};
}

std::string render(const Document& doc, Format format) {
  json full = doc.body;
  full["command"] = doc.command;
  full["schema_version"] = kSchemaVersion;

  if (format == Format::json) return full.dump(2) + "\n";

  const bool has_rows = !doc.rows_key.empty() && doc.body.contains(doc.rows_key) &&
                        doc.body.at(doc.rows_key).is_array();
  std::ostringstream os;
  if (format == Format::csv) {
    json rows = has_rows ? doc.body.at(doc.rows_key) : json::array({doc.body});
    const auto columns = columns_of(rows);
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << csv_escape(columns[c]);
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        os << (c ? "," : "") << csv_escape(field(row, columns[c]));
      }
      os << '\n';
    }
    return os.str();
  }

  os << doc.command << '\n';
  for (const auto& [key, value] : doc.body.items()) {
    if (has_rows && key == doc.rows_key) continue;
    os << "  " << key << ": " << cell(value) << '\n';
  }
  if (has_rows) {
    const json& rows = doc.body.at(doc.rows_key);
    const auto columns = columns_of(rows);
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = std::max(width[c], field(row, columns[c]).size());
      }
    }
    os << doc.rows_key << " (" << rows.size() << ")\n";
    const auto line = [&](auto get) {
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const std::string text = get(c);
        os << "  " << text << std::string(width[c] - text.size(), ' ');
      }
      os << '\n';
    };
    line([&](std::size_t c) { return columns[c]; });
    for (const auto& row : rows) line([&](std::size_t c) { return field(row, columns[c]); });
  }
  return os.str();
}

}  // namespace rootcluster::report
