#include "rootcluster/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rootcluster/errors.hpp"

namespace rootcluster::nt {

bool Factorization::is_squarefree() const {
  for (const auto& f : factors) {
    if (f.exponent > 1) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: n must be positive");
  Factorization out;
  out.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    PrimePower pp{p, 0};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
    }
    out.factors.push_back(pp);
  }
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (const auto& f : factorize(n).factors) {
    phi = phi / f.prime * (f.prime - 1);
  }
  return phi;
}

std::uint64_t gcd(std::int64_t a, std::int64_t b) {
  return static_cast<std::uint64_t>(std::gcd(a, b));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.factors.size() == 1 && f.factors.front().exponent == 1;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("integer overflow multiplying " + std::to_string(a) + " by " +
                      std::to_string(b));
  }
  return out;
}

std::uint64_t factorial(std::uint64_t m) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= m; ++i) out = checked_mul(out, i);
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // exact at every step: out * (n - k + i) is divisible by i
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

}  // namespace rootcluster::nt
