#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rootcluster::nt {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  bool operator==(const PrimePower&) const = default;
};

// Prime factorization of n, primes strictly ascending. Empty for n == 1.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  bool is_squarefree() const;
  bool operator==(const Factorization&) const = default;
};

/// Trial division; adequate for n up to about 10^12. Throws DomainError for n == 0.
Factorization factorize(std::uint64_t n);

/// Number of 1 <= u <= n with gcd(u, n) == 1. Throws DomainError for n == 0.
std::uint64_t euler_phi(std::uint64_t n);

// Non-negative gcd; gcd(0, 0) == 0.
std::uint64_t gcd(std::int64_t a, std::int64_t b);

bool is_prime(std::uint64_t n);

// Overflow-checked helpers; both throw DomainError on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t factorial(std::uint64_t m);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace rootcluster::nt
