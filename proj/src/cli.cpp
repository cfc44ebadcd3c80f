#include "rootcluster/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "rootcluster/clusters.hpp"
#include "rootcluster/errors.hpp"
#include "rootcluster/gensets.hpp"
#include "rootcluster/report.hpp"
#include "rootcluster/towers.hpp"
#include "rootcluster/verify.hpp"

namespace rootcluster::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "table";
  std::string output;
  Budgets budgets;

  std::optional<std::uint64_t> affine;
  std::optional<std::uint64_t> symmetric;
  std::optional<std::uint64_t> cyclic;
  std::string generators;
  std::string name;

  std::vector<unsigned> roots;
  std::vector<unsigned> order;
  std::optional<std::size_t> max_cardinality;
  bool minimum_only = false;
  bool count_only = false;

  std::string theorem;
  std::optional<std::uint64_t> n;
  std::vector<std::uint64_t> primes;
  std::optional<std::uint64_t> k;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<ModelSpec> model_spec(const Options& o) {
  std::vector<ModelSpec> specs;
  if (o.affine) specs.push_back({ModelSpec::Kind::affine, *o.affine, {}, {}});
  if (o.symmetric) specs.push_back({ModelSpec::Kind::symmetric, *o.symmetric, {}, {}});
  if (o.cyclic) specs.push_back({ModelSpec::Kind::cyclic, *o.cyclic, {}, {}});
  if (!o.generators.empty()) {
    specs.push_back({ModelSpec::Kind::generators, 0, o.generators, o.name});
  }
  if (specs.size() > 1) {
    throw UsageError("give exactly one of --affine, --symmetric, --cyclic, --generators");
  }
  if (specs.empty()) return std::nullopt;
  return specs.front();
}

GaloisModel require_model(const Options& o) {
  auto spec = model_spec(o);
  if (!spec) throw UsageError("this command needs a model: --affine, --symmetric, --cyclic or --generators");
  return build_model(*spec, o.budgets);
}

std::vector<Label> labels(const std::vector<unsigned>& raw, const char* flag) {
  if (raw.empty()) throw UsageError(std::string(flag) + " needs at least one root label");
  std::vector<Label> out;
  for (unsigned x : raw) {
    if (x > kMaxDegree) throw DomainError(std::string(flag) + ": label " + std::to_string(x) + " out of range");
    out.push_back(static_cast<Label>(x));
  }
  return out;
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(o.output);
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw DomainError("cannot write " + temp.string());
    file << text;
    if (!file.flush()) throw DomainError("cannot write " + temp.string());
  }
  std::filesystem::rename(temp, target);
}

report::Document model_info(const Options& o) {
  const auto model = require_model(o);
  return {"model info", {{"model", report::model_json(model)}}, {}};
}

report::Document clusters(const Options& o) {
  const auto model = require_model(o);
  const auto partition = cluster_partition(model);
  json body = report::partition_json(partition);
  body["model"] = report::model_json(model);
  json rows = json::array();
  for (std::size_t i = 0; i < partition.clusters.size(); ++i) {
    rows.push_back({{"cluster", i},
                    {"representative", partition.clusters[i].front()},
                    {"roots", partition.clusters[i]}});
  }
  body["rows"] = rows;
  return {"clusters", body, "rows"};
}

report::Document mgs_enumerate(const Options& o) {
  const auto model = require_model(o);
  std::vector<RootSet> sets;
  json body;
  if (o.minimum_only) {
    auto minimum = minimum_minimal(model, o.budgets);
    body["minimum_cardinality"] = minimum.cardinality;
    sets = std::move(minimum.sets);
  } else {
    sets = enumerate_minimal(model, o.max_cardinality, o.budgets);
  }
  std::map<std::string, std::size_t> by_size;
  json rows = json::array();
  for (const auto& b : sets) {
    ++by_size[std::to_string(b.size())];
    rows.push_back({{"cardinality", b.size()}, {"roots", b}});
  }
  body["model"] = report::model_json(model);
  body["count"] = sets.size();
  body["count_by_cardinality"] = by_size;
  body["sets"] = rows;
  return {o.minimum_only ? "mgs enumerate --minimum" : "mgs enumerate", body, "sets"};
}

report::Document mgs_check(const Options& o) {
  const auto model = require_model(o);
  const auto roots = labels(o.roots, "--roots");
  json body = report::genset_json(model, is_minimal(model, roots));
  body["model"] = report::model_json(model);
  return {"mgs check", body, {}};
}

report::Document mgs_reduce(const Options& o) {
  const auto model = require_model(o);
  const auto roots = labels(o.roots, "--roots");
  const RootSet result = reduce_to_minimal(model, roots);
  return {"mgs reduce",
          {{"model", report::model_json(model)},
           {"input", make_root_set(roots)},
           {"result", result},
           {"cardinality", result.size()}},
          {}};
}

report::Document towers_build(const Options& o) {
  const auto model = require_model(o);
  const auto order = labels(o.order, "--order");
  json body = report::tower_json(model, build_tower(model, order));
  body["model"] = report::model_json(model);
  return {"towers build", body, {}};
}

report::Document towers_enumerate(const Options& o) {
  const auto model = require_model(o);
  const auto census = enumerate_distinct_towers(model, o.budgets, !o.count_only);
  json rows = json::array();
  for (const auto& t : census.towers) rows.push_back(report::tower_json(model, t));
  return {"towers enumerate",
          {{"model", report::model_json(model)}, {"count", census.count}, {"towers", rows}},
          "towers"};
}

report::Document towers_minlen(const Options& o) {
  const auto model = require_model(o);
  const auto least = min_length_towers(model, o.budgets, !o.count_only);
  json rows = json::array();
  for (const auto& t : least.towers) rows.push_back(report::tower_json(model, t));
  return {"towers minlen",
          {{"model", report::model_json(model)},
           {"least_length", least.least_length},
           {"count", least.count},
           {"towers", rows}},
          "towers"};
}

std::pair<report::Document, int> verify(const Options& o) {
  std::vector<TheoremReport> reports;
  if (o.theorem == "all") {
    if (o.n || o.k || !o.primes.empty() || model_spec(o)) {
      throw UsageError("'verify all' runs the default battery and takes no parameters");
    }
    reports = verify_all(default_battery(), o.budgets);
  } else {
    // a single check reports bad parameters as a domain error instead of a skip
    VerifyParams params;
    params.n = o.n;
    params.k = o.k;
    params.primes = o.primes;
    params.model = model_spec(o);
    reports.push_back(verify_theorem(o.theorem, params, o.budgets));
  }
  json rows = json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    rows.push_back(report::theorem_json(r));
    passed += r.pass() ? 1 : 0;
  }
  const int code = exit_code(reports);
  return {{"verify " + o.theorem,
           {{"reports", rows},
            {"total", reports.size()},
            {"passed", passed},
            {"exit_code", code}},
           "reports"},
          code};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o.budgets = Budgets::from_environment();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Root clusters, minimal generating sets and cluster towers of Galois models",
               "rootcluster"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("-o,--output", o.output, "Write the report to this file instead of stdout");
  app.add_option("--closure-budget", o.budgets.closure_elements, "Maximum group order")
      ->check(CLI::PositiveNumber);
  app.add_option("--storage-budget", o.budgets.storage_entries,
                 "Maximum stored permutation images (order * degree)")
      ->check(CLI::PositiveNumber);
  app.add_option("--subset-budget", o.budgets.subset_tests,
                 "Maximum candidate subsets tested by enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--tower-budget", o.budgets.tower_nodes, "Maximum DFS nodes when listing towers")
      ->check(CLI::PositiveNumber);
  app.add_option("--ordering-budget", o.budgets.orderings,
                 "Maximum orderings of one root set")
      ->check(CLI::PositiveNumber);

  auto* model_group = app.add_option_group("model", "Galois model (exactly one)");
  model_group->add_option("--affine", o.affine,
                          "x^n - c over Q, odd n >= 3; root j is a*zeta^j");
  model_group->add_option("--symmetric", o.symmetric, "Full symmetric group on m roots");
  model_group->add_option("--cyclic", o.cyclic, "Cyclic Galois group of order n (regular action)");
  model_group->add_option("--generators", o.generators, "Generator file (one permutation per line)");
  model_group->add_option("--name", o.name, "Name for a generator-file model");

  report::Document doc;
  int code = kOk;
  std::function<void()> action;

  auto* model_cmd = app.add_subcommand("model", "Model commands");
  model_cmd->require_subcommand(1);
  model_cmd->add_subcommand("info", "Group order, action and root meaning")
      ->callback([&] { action = [&] { doc = model_info(o); }; });

  app.add_subcommand("clusters", "Root clusters, cluster size and count")
      ->callback([&] { action = [&] { doc = clusters(o); }; });

  auto* mgs = app.add_subcommand("mgs", "Minimal generating sets of the splitting field");
  mgs->require_subcommand(1);
  auto* mgs_enum = mgs->add_subcommand("enumerate", "All minimal generating sets");
  mgs_enum->add_option("--max-cardinality", o.max_cardinality, "Largest set size to search");
  mgs_enum->add_flag("--minimum", o.minimum_only, "Only the minimum minimal sets");
  mgs_enum->callback([&] { action = [&] { doc = mgs_enumerate(o); }; });
  auto* check = mgs->add_subcommand("check", "Whether a root set generates and is minimal");
  check->add_option("--roots", o.roots, "Root labels, comma separated")->delimiter(',')->required();
  check->callback([&] { action = [&] { doc = mgs_check(o); }; });
  auto* reduce = mgs->add_subcommand("reduce", "Shrink a generating set to a minimal one");
  reduce->add_option("--roots", o.roots, "Root labels, comma separated")->delimiter(',')->required();
  reduce->callback([&] { action = [&] { doc = mgs_reduce(o); }; });

  auto* towers = app.add_subcommand("towers", "Cluster towers");
  towers->require_subcommand(1);
  auto* build = towers->add_subcommand("build", "Tower of one ordering");
  build->add_option("--order", o.order, "Root labels, comma separated")->delimiter(',')->required();
  build->callback([&] { action = [&] { doc = towers_build(o); }; });
  auto* enumerate = towers->add_subcommand("enumerate", "All distinct cluster towers");
  enumerate->add_flag("--count-only", o.count_only, "Skip listing the towers");
  enumerate->callback([&] { action = [&] { doc = towers_enumerate(o); }; });
  auto* minlen = towers->add_subcommand("minlen", "Towers of least length");
  minlen->add_flag("--count-only", o.count_only, "Skip listing the towers");
  minlen->callback([&] { action = [&] { doc = towers_minlen(o); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against brute force");
  verify_cmd->add_option("theorem", o.theorem, "Check id or 'all'")->required();
  verify_cmd->add_option("--n", o.n, "Root count / modulus");
  verify_cmd->add_option("--primes", o.primes, "Distinct odd primes, comma separated")
      ->delimiter(',');
  verify_cmd->add_option("--k", o.k, "Size parameter for symmetric-group checks");
  verify_cmd->callback([&] {
    action = [&] {
      auto [d, c] = verify(o);
      doc = std::move(d);
      code = c;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    action();
    const auto format = report::parse_format(o.format);
    write_output(o, report::render(doc, *format), out);
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace rootcluster::cli
