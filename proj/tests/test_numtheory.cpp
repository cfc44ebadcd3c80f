#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rootcluster/errors.hpp"
#include "rootcluster/numtheory.hpp"

using namespace rootcluster;

TEST_CASE("euler_phi") {
  CHECK(nt::euler_phi(1) == 1);
  CHECK(nt::euler_phi(9) == 6);
  CHECK(nt::euler_phi(105) == 48);  // oracle::count_coprime(105)
  CHECK(oracle::count_coprime(105) == 48);
  CHECK_THROWS_AS(nt::euler_phi(0), DomainError);
}

TEST_CASE("gcd") {
  CHECK(nt::gcd(0, 7) == 7);
  CHECK(nt::gcd(6, 9) == 3);
  CHECK(nt::gcd(4, 15) == 1);
  CHECK(nt::gcd(0, 0) == 0);
  CHECK(nt::gcd(-6, 9) == 3);
}

TEST_CASE("factorize") {
  using F = std::vector<nt::PrimePower>;
  CHECK(nt::factorize(105).factors == F{{3, 1}, {5, 1}, {7, 1}});
  CHECK(nt::factorize(9).factors == F{{3, 2}});
  CHECK(nt::factorize(1).factors.empty());
  CHECK(nt::factorize(105).is_squarefree());
  CHECK_FALSE(nt::factorize(9).is_squarefree());
  CHECK_THROWS_AS(nt::factorize(0), DomainError);

  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto f = nt::factorize(n);
    std::uint64_t product = 1;
    std::uint64_t last = 1;
    for (const auto& pp : f.factors) {
      CHECK(pp.prime > last);
      CHECK(pp.exponent >= 1);
      CHECK(nt::is_prime(pp.prime));
      for (std::uint32_t e = 0; e < pp.exponent; ++e) product *= pp.prime;
      last = pp.prime;
    }
    CHECK(product == n);
  }
}

TEST_CASE("phi is multiplicative on coprime arguments") {
  for (std::uint64_t a = 1; a <= 60; ++a) {
    for (std::uint64_t b = 1; b <= 60; ++b) {
      if (nt::gcd(a, b) != 1) continue;
      CHECK(nt::euler_phi(a * b) == nt::euler_phi(a) * nt::euler_phi(b));
    }
  }
}

TEST_CASE("phi of squarefree n is the product of p - 1") {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const auto f = nt::factorize(n);
    if (!f.is_squarefree()) continue;
    std::uint64_t expected = 1;
    for (const auto& pp : f.factors) expected *= pp.prime - 1;
    CHECK(expected == oracle::count_coprime(n));
    CHECK(nt::euler_phi(n) == expected);
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(nt::factorial(0) == 1);
  CHECK(nt::factorial(9) == 362880);
  CHECK(nt::binomial(13, 2) == 78);
  CHECK(nt::binomial(5, 7) == 0);
  CHECK_THROWS_AS(nt::factorial(21), DomainError);
  CHECK_THROWS_AS(nt::checked_mul(1ULL << 40, 1ULL << 40), DomainError);
}
