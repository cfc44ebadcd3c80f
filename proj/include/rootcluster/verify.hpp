#pragma once

// Verification battery: each report evaluates a closed form (the claim) and the
// corresponding brute-force computation (the observation) on one parameter set,
// and passes when the two agree exactly.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootcluster/budgets.hpp"
#include "rootcluster/models.hpp"

namespace rootcluster {

struct VerifyParams {
  std::optional<std::uint64_t> n;
  std::vector<std::uint64_t> primes;
  std::optional<std::uint64_t> k;
  std::optional<ModelSpec> model;

  nlohmann::json to_json() const;
};

enum class ReportStatus { pass, fail, skipped };

struct TheoremReport {
  std::string id;
  VerifyParams parameters;
  nlohmann::json claimed;
  nlohmann::json observed;
  nlohmann::json details;  // context not part of the comparison
  ReportStatus status = ReportStatus::fail;
  bool budget_exceeded = false;
  std::string skip_reason;
  std::chrono::milliseconds elapsed{0};

  bool pass() const noexcept { return status == ReportStatus::pass; }
};

struct VerifyRequest {
  std::string id;
  VerifyParams params;
};

/// Known ids, in battery order.
const std::vector<std::string>& theorem_ids();

/// Runs one check. Throws DomainError for an unknown id or parameters the check
/// cannot use; a budget overrun is recorded in the report as a skip.
TheoremReport verify_theorem(const std::string& id, const VerifyParams& params,
                             const Budgets& budgets = {});

/// The default battery, covering every acceptance criterion.
std::vector<VerifyRequest> default_battery();

/// Runs each request in order. Domain errors (e.g. an even n) become skipped
/// reports carrying the message.
std::vector<TheoremReport> verify_all(const std::vector<VerifyRequest>& requests,
                                      const Budgets& budgets = {});

/// 0 if every report passed; 1 if any failed; otherwise 2 if a budget was
/// exceeded, 1 for any other skip.
int exit_code(const std::vector<TheoremReport>& reports);

const char* to_string(ReportStatus status);

}  // namespace rootcluster
