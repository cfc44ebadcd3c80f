#pragma once

// Cluster towers K ⊆ K(b1) ⊆ K(b1, b2) ⊆ ... for an ordering of roots from
// distinct clusters. A tower is identified by its sequence of distinct fields,
// i.e. by its chain of distinct pointwise stabilizers.

#include <cstdint>
#include <optional>
#include <vector>

#include "rootcluster/budgets.hpp"
#include "rootcluster/models.hpp"

namespace rootcluster {

struct Tower {
  std::vector<Label> ordering;
  // chain[i] is the pointwise stabilizer of the first i roots; chain[0] == G.
  std::vector<Subgroup> chain;
  // `chain` with consecutive repeats removed; one entry per distinct field,
  // the base field K included.
  std::vector<Subgroup> distinct_fields;
  // Degrees over K of the distinct fields above K, in chain order.
  std::vector<std::uint64_t> degree_sequence;
  // Whether the last field is the splitting field. Chains that stop short are
  // not cluster towers; `residual_witness` then holds an element fixing them.
  bool terminates = false;
  std::optional<Perm> residual_witness;

  std::size_t length() const noexcept { return distinct_fields.size(); }
};

/// Throws DomainError for an empty ordering, out-of-range labels, or two roots
/// from one cluster (a minimal generating set never has those).
Tower build_tower(const GaloisModel& model, std::span<const Label> ordering);

/// One tower per ordering of `roots`, orderings in lexicographic order.
/// Throws ResourceError when |roots|! exceeds `budgets.orderings`.
std::vector<Tower> towers_of_set(const GaloisModel& model, std::span<const Label> roots,
                                 const Budgets& budgets = {});

struct TowerCensus {
  std::uint64_t count = 0;
  // Filled only when listing was requested. Each tower's ordering is a complete
  // set of cluster representatives realizing that chain.
  std::vector<Tower> towers;
};

/// All distinct cluster towers over orderings of a complete set of cluster
/// representatives. Counting is memoized per subgroup; listing visits one DFS
/// node per distinct chain prefix and throws ResourceError past
/// `budgets.tower_nodes`.
TowerCensus enumerate_distinct_towers(const GaloisModel& model, const Budgets& budgets = {},
                                      bool list_towers = true);

struct LeastLengthTowers {
  std::size_t least_length = 0;
  std::uint64_t count = 0;
  std::vector<Tower> towers;
};

LeastLengthTowers min_length_towers(const GaloisModel& model, const Budgets& budgets = {},
                                    bool list_towers = true);

/// Number of roots lying in the fixed field of h. Throws DomainError unless h ⊆ G.
std::size_t root_capacity(const GaloisModel& model, const Subgroup& h);

// For n = p_1 ... p_k, the field generated by a*zeta^(n/p_1), ..., a*zeta^(n/p_i)
// with i >= 2 equals Q(a, zeta^(n/(p_1...p_i))). Group side: the pointwise
// stabilizer of {n/p_1, ..., n/p_i} is {(0, u) : u = 1 mod p_1...p_i}.
struct IntermediateFieldCheck {
  std::size_t i = 0;
  RootSet roots;
  std::size_t stabilizer_order = 0;
  std::size_t expected_order = 0;
  bool matches = false;
};

std::vector<IntermediateFieldCheck> check_intermediate_fields(std::span<const std::uint64_t> primes,
                                                              const Budgets& budgets = {});
bool intermediate_fields_hold(std::span<const std::uint64_t> primes, const Budgets& budgets = {});

}  // namespace rootcluster
