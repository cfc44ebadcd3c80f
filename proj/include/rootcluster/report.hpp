#pragma once

// Report serialization for the command-line tool. JSON documents carry a
// `schema_version` and contain only integers, booleans, strings and arrays of
// those, with keys in sorted order, so dumping a parsed report reproduces it
// byte for byte.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rootcluster/clusters.hpp"
#include "rootcluster/gensets.hpp"
#include "rootcluster/models.hpp"
#include "rootcluster/towers.hpp"
#include "rootcluster/verify.hpp"

namespace rootcluster::report {

inline constexpr int kSchemaVersion = 1;

enum class Format { table, json, csv };

std::optional<Format> parse_format(std::string_view name);

nlohmann::json model_json(const GaloisModel& model);
nlohmann::json perm_json(const GaloisModel& model, const Perm& p);
nlohmann::json partition_json(const ClusterPartition& partition);
nlohmann::json genset_json(const GaloisModel& model, const GenSetReport& report);
nlohmann::json tower_json(const GaloisModel& model, const Tower& tower);
nlohmann::json theorem_json(const TheoremReport& report);

// A command's output. `rows_key` names the array rendered as table rows and CSV
// records; when empty, the document's scalar fields form a single record.
struct Document {
  std::string command;
  nlohmann::json body = nlohmann::json::object();
  std::string rows_key;
};

/// JSON: the body plus `command` and `schema_version`, two-space indented.
std::string render(const Document& doc, Format format);

}  // namespace rootcluster::report
