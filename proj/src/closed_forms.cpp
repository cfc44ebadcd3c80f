#include "rootcluster/closed_forms.hpp"

#include "rootcluster/errors.hpp"
#include "rootcluster/numtheory.hpp"

namespace rootcluster::closed_forms {

std::uint64_t minimum_minimal_count(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) throw DomainError("minimum_minimal_count: n must be odd and >= 3");
  return nt::checked_mul(n, nt::euler_phi(n)) / 2;
}

std::vector<std::uint64_t> cofactor_degree_sequence(std::span<const std::uint64_t> primes) {
  std::uint64_t n = 1;
  for (auto p : primes) n = nt::checked_mul(n, p);
  std::vector<std::uint64_t> out{n};
  std::uint64_t prefix = primes.empty() ? 1 : primes[0];
  for (std::size_t i = 1; i < primes.size(); ++i) {
    prefix *= primes[i];
    out.push_back(nt::checked_mul(n, nt::euler_phi(prefix)));
  }
  return out;
}

std::vector<std::uint64_t> cofactor_root_capacities(std::span<const std::uint64_t> primes) {
  std::vector<std::uint64_t> out{1};
  std::uint64_t prefix = primes.empty() ? 1 : primes[0];
  for (std::size_t i = 1; i < primes.size(); ++i) {
    prefix *= primes[i];
    out.push_back(prefix);
  }
  return out;
}

std::vector<std::uint64_t> cofactor_stabilizer_orders(std::span<const std::uint64_t> primes) {
  std::uint64_t n = 1;
  for (auto p : primes) n = nt::checked_mul(n, p);
  std::vector<std::uint64_t> out;
  std::uint64_t prefix = primes.empty() ? 1 : primes[0];
  for (std::size_t i = 1; i < primes.size(); ++i) {
    prefix *= primes[i];
    out.push_back(nt::euler_phi(n) / nt::euler_phi(prefix));
  }
  return out;
}

std::uint64_t symmetric_tower_count(std::uint64_t m) {
  if (m < 2) throw DomainError("symmetric_tower_count: m must be >= 2");
  return nt::factorial(m) / 2;
}

std::uint64_t affine_least_length_count(std::uint64_t n) { return n; }

std::vector<std::uint64_t> affine_least_degree_sequence(std::uint64_t n) {
  return {n, nt::checked_mul(n, nt::euler_phi(n))};
}

}  // namespace rootcluster::closed_forms
