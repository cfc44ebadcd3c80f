#include "rootcluster/budgets.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "rootcluster/errors.hpp"

namespace rootcluster {

namespace {

void override_from(const char* variable, std::uint64_t& target) {
  const char* raw = std::getenv(variable);
  if (raw == nullptr || *raw == '\0') return;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw DomainError(std::string(variable) + " must be a positive integer, got '" + raw + "'");
  }
  target = value;
}

}  // namespace

Budgets Budgets::from_environment() {
  Budgets budgets;
  override_from("ROOTCLUSTER_CLOSURE_BUDGET", budgets.closure_elements);
  override_from("ROOTCLUSTER_STORAGE_BUDGET", budgets.storage_entries);
  override_from("ROOTCLUSTER_SUBSET_BUDGET", budgets.subset_tests);
  override_from("ROOTCLUSTER_TOWER_BUDGET", budgets.tower_nodes);
  override_from("ROOTCLUSTER_ORDERING_BUDGET", budgets.orderings);
  return budgets;
}

void Budgets::validate() const {
  if (closure_elements == 0 || storage_entries == 0 || subset_tests == 0 || tower_nodes == 0 ||
      orderings == 0) {
    throw DomainError("budgets must be positive");
  }
}

}  // namespace rootcluster
