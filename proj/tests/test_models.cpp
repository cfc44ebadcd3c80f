#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rootcluster/errors.hpp"
#include "rootcluster/models.hpp"
#include "rootcluster/numtheory.hpp"

using namespace rootcluster;

TEST_CASE("affine model orders against the brute-force element list") {
  for (std::uint64_t n = 3; n <= 45; n += 2) {
    const auto model = affine_model(n);
    CHECK(model.n() == n);
    CHECK(model.group().order() == oracle::affine_elements(n).size());
    CHECK(is_transitive(model.group()));
    CHECK(is_faithful(model.group()));
  }
  CHECK(affine_model(105).group().order() == 5040);
}

TEST_CASE("affine model agrees with closure of its two generators") {
  for (std::uint64_t n : {3, 9, 15, 21, 25}) {
    const auto model = affine_model(n);
    std::vector<Perm> gens{model.affine_perm({1, 1})};
    for (std::uint64_t u = 2; u < n; ++u) {
      if (nt::gcd(u, n) == 1) gens.push_back(model.affine_perm({0, static_cast<std::uint32_t>(u)}));
    }
    CHECK(close(gens) == model.group());
  }
}

TEST_CASE("affine model rejects unsupported n") {
  CHECK_THROWS_AS(affine_model(1), DomainError);
  CHECK_THROWS_AS(affine_model(2), DomainError);
  CHECK_THROWS_AS(affine_model(8), DomainError);
  try {
    affine_model(8);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("odd") != std::string::npos);
  }
}

TEST_CASE("affine labels and the group law") {
  const auto model = affine_model(9);
  CHECK(model.affine_perm({2, 4}).to_string() == "2,6,1,5,0,4,8,3,7");
  CHECK(*model.affine_label(model.affine_perm({2, 4})) == AffineElement{2, 4});
  CHECK_THROWS_AS(model.affine_perm({0, 3}), DomainError);
  CHECK_THROWS_AS(model.affine_perm({9, 1}), DomainError);
  CHECK_FALSE(symmetric_model(3).affine_label(Perm::identity(3)).has_value());

  CHECK(affine_compose({1, 2}, {3, 4}, 9) == AffineElement{7, 8});

  // labeling is a homomorphism
  std::mt19937 rng(11);
  for (std::uint64_t n : {9, 15, 35, 105}) {
    const auto m = affine_model(n);
    const auto& g = m.group();
    for (int t = 0; t < 200; ++t) {
      const auto& p = g[rng() % g.order()];
      const auto& q = g[rng() % g.order()];
      CHECK(*m.affine_label(compose(p, q)) ==
            affine_compose(*m.affine_label(p), *m.affine_label(q), n));
    }
  }
}

TEST_CASE("closed-form root stabilizers") {
  for (std::uint64_t n = 3; n <= 45; n += 2) {
    const auto model = affine_model(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto label = static_cast<Label>(j);
      CHECK(affine_H_j(n, label) == stabilizer(model.group(), label));
    }
  }
}

TEST_CASE("symmetric and cyclic models") {
  CHECK_THROWS_AS(symmetric_model(1), DomainError);
  CHECK(symmetric_model(4).group().order() == 24);
  CHECK(symmetric_model(6).group().order() == 720);
  CHECK_THROWS_AS(symmetric_model(0), DomainError);
  Budgets tight;
  tight.closure_elements = 100;
  CHECK_THROWS_AS(symmetric_model(5, tight), ResourceError);

  const auto c5 = cyclic_model(5);
  CHECK(c5.group().order() == 5);
  CHECK(c5.family().describe() == "custom(cyclic5)");
  CHECK(affine_model(9).family().describe() == "affine(9)");
  CHECK(symmetric_model(4).family().describe() == "symmetric(4)");
}

TEST_CASE("custom models must be transitive") {
  const std::vector<Perm> swap01{Perm({1, 0, 2, 3})};
  CHECK_THROWS_AS(custom_model(4, swap01, "v"), DomainError);
  try {
    custom_model(4, swap01, "v");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("transitive") != std::string::npos);
  }
  const std::vector<Perm> gens{Perm({1, 2, 3, 0}), Perm({1, 0, 2, 3})};
  CHECK(custom_model(4, gens, "s4").group().order() == 24);
  CHECK_THROWS_AS(custom_model(5, gens, "bad"), DomainError);
}

TEST_CASE("build_model") {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::affine;
  spec.parameter = 15;
  CHECK(build_model(spec).group().order() == 120);
  spec.kind = ModelSpec::Kind::symmetric;
  spec.parameter = 3;
  CHECK(build_model(spec).group().order() == 6);
  spec.kind = ModelSpec::Kind::generators;
  spec.generators_path = "/nonexistent";
  CHECK_THROWS_AS(build_model(spec), DomainError);
}

TEST_CASE("worked stabilizer examples") {
  const auto model = affine_model(9);
  std::vector<AffineElement> labels;
  const auto h3 = affine_H_j(9, 3);
  for (const auto& p : h3.elements()) labels.push_back(*model.affine_label(p));
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<AffineElement>{{0, 1}, {0, 4}, {0, 7}, {6, 2}, {6, 5}, {6, 8}});
  CHECK_THROWS_AS(affine_H_j(9, 9), DomainError);
  CHECK_THROWS_AS(affine_H_j(8, 0), DomainError);
}

TEST_CASE("labeling is a homomorphism on all pairs for small n") {
  for (std::uint64_t n = 3; n <= 15; n += 2) {
    const auto model = affine_model(n);
    const auto& g = model.group();
    for (const auto& p : g.elements()) {
      for (const auto& q : g.elements()) {
        CHECK(*model.affine_label(compose(p, q)) ==
              affine_compose(*model.affine_label(p), *model.affine_label(q), n));
      }
    }
  }
}

TEST_CASE("symmetric point stabilizers") {
  for (std::uint64_t m = 2; m <= 6; ++m) {
    const auto g = symmetric_model(m).group();
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(stabilizer(g, static_cast<Label>(i)).order() == nt::factorial(m - 1));
    }
  }
}

TEST_CASE("small custom models") {
  const std::vector<Perm> swap{Perm({1, 0})};
  CHECK(custom_model(2, swap, "quadratic").group().order() == 2);
  const std::vector<Perm> three{Perm({1, 2, 0})};
  CHECK(custom_model(3, three, "cyclic3").group().order() == 3);
  const std::vector<Perm> identity{Perm::identity(4)};
  CHECK_THROWS_AS(custom_model(4, identity, "none"), DomainError);
}
