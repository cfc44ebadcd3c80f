#pragma once

// Generating sets of the splitting field. A set of roots B generates K_f exactly
// when its pointwise stabilizer in G is trivial; it is minimal when, moreover,
// no root of B lies in the field generated by the others.

#include <cstdint>
#include <optional>
#include <vector>

#include "rootcluster/budgets.hpp"
#include "rootcluster/models.hpp"

namespace rootcluster {

struct GenerationCheck {
  bool generates = false;
  // Least nontrivial element of the pointwise stabilizer when B does not generate.
  std::optional<Perm> witness;
};

struct GenSetReport {
  RootSet roots;
  bool generates = false;
  bool minimal = false;
  std::optional<Perm> residual_witness;  // set when B does not generate
  std::optional<Label> removable_root;   // set when B generates but is not minimal
};

GenerationCheck is_generating(const GaloisModel& model, std::span<const Label> roots);

/// Throws DomainError for an empty set or out-of-range labels. The removable
/// root reported for a non-minimal set is the largest one.
GenSetReport is_minimal(const GaloisModel& model, std::span<const Label> roots);

/// Deletes the largest removable root until none is left.
/// Throws DomainError unless `roots` generates.
RootSet reduce_to_minimal(const GaloisModel& model, std::span<const Label> roots);

/// Every minimal generating set with at most `max_cardinality` roots (at most
/// s in any case), ordered by size then lexicographically.
/// Throws ResourceError once `budgets.subset_tests` candidates have been tested.
std::vector<RootSet> enumerate_minimal(const GaloisModel& model,
                                       std::optional<std::size_t> max_cardinality = std::nullopt,
                                       const Budgets& budgets = {});

struct MinimumMinimal {
  std::size_t cardinality = 0;
  std::vector<RootSet> sets;
  std::size_t count() const noexcept { return sets.size(); }
};

MinimumMinimal minimum_minimal(const GaloisModel& model, const Budgets& budgets = {});

/// {a*zeta^k, a*zeta^l} generates the splitting field of x^n - c iff gcd(l - k, n) == 1.
/// Requires odd n >= 3 and 0 <= k < l < n.
bool gcd_pair_criterion(std::uint64_t n, std::uint64_t k, std::uint64_t l);

// For n = p_1 ... p_k with k > 2 distinct odd primes, two minimal generating sets
// of the splitting field of x^n - c with different sizes: {a, a*zeta} and
// {a*zeta^(n/p_i)}.
struct TwoSizedMinimalSets {
  std::uint64_t n = 0;
  RootSet pair;                                // {0, 1}
  RootSet cofactor;                            // {n/p_i}, sorted
  std::vector<Label> cofactor_in_prime_order;  // n/p_1, n/p_2, ...
};

TwoSizedMinimalSets two_sized_minimal_sets(std::span<const std::uint64_t> primes);

}  // namespace rootcluster
