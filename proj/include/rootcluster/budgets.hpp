#pragma once

#include <cstdint>

namespace rootcluster {

// Work limits shared by every module. All of them must be positive.
struct Budgets {
  // Maximum number of elements a group may have (closure, symmetric models).
  std::uint64_t closure_elements = 1'000'000;
  // Maximum number of stored image entries, |G| * degree, for one group.
  std::uint64_t storage_entries = 1'000'000'000;
  // Maximum number of candidate subsets tested by generating-set enumeration.
  std::uint64_t subset_tests = 10'000'000;
  // Maximum number of DFS nodes visited when listing towers.
  std::uint64_t tower_nodes = 1'000'000;
  // Maximum number of orderings of a single root set (10!).
  std::uint64_t orderings = 3'628'800;

  // Defaults overridden by ROOTCLUSTER_CLOSURE_BUDGET, ROOTCLUSTER_STORAGE_BUDGET,
  // ROOTCLUSTER_SUBSET_BUDGET, ROOTCLUSTER_TOWER_BUDGET and
  // ROOTCLUSTER_ORDERING_BUDGET when those are set to positive integers.
  static Budgets from_environment();

  // Throws DomainError if any limit is zero.
  void validate() const;
};

}  // namespace rootcluster
