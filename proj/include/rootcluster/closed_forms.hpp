#pragma once

// Closed-form values for the x^n - c and symmetric-group families. These are the
// "claimed" side of every verification and must never be called from the
// enumerators they are checked against.

#include <cstdint>
#include <span>
#include <vector>

namespace rootcluster::closed_forms {

/// n*phi(n)/2: pairs {k, l} with gcd(l - k, n) == 1, which are exactly the
/// minimum minimal generating sets for odd n >= 3.
std::uint64_t minimum_minimal_count(std::uint64_t n);

/// (n, n*phi(p_1 p_2), n*phi(p_1 p_2 p_3), ..., n*phi(n)) for the tower over
/// a*zeta^(n/p_1), a*zeta^(n/p_2), ... taken in the given prime order.
std::vector<std::uint64_t> cofactor_degree_sequence(std::span<const std::uint64_t> primes);

/// Roots in each field of that tower: (1, p_1 p_2, p_1 p_2 p_3, ..., n).
std::vector<std::uint64_t> cofactor_root_capacities(std::span<const std::uint64_t> primes);

/// Orders of the pointwise stabilizers of {n/p_1, ..., n/p_i}, i = 2..k:
/// phi(n)/phi(p_1...p_i).
std::vector<std::uint64_t> cofactor_stabilizer_orders(std::span<const std::uint64_t> primes);

/// Distinct cluster towers of a polynomial with Galois group S_m: m!/2.
std::uint64_t symmetric_tower_count(std::uint64_t m);

// Least-length towers for x^n - c, odd n: n of them, length 3, degrees (n, n*phi(n)).
inline constexpr std::size_t kAffineLeastLength = 3;
std::uint64_t affine_least_length_count(std::uint64_t n);
std::vector<std::uint64_t> affine_least_degree_sequence(std::uint64_t n);

}  // namespace rootcluster::closed_forms
