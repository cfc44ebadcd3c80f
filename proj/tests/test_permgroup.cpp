#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rootcluster/errors.hpp"
#include "rootcluster/models.hpp"
#include "rootcluster/permgroup.hpp"

using namespace rootcluster;

namespace {

Perm P(std::initializer_list<Label> images) { return Perm(std::vector<Label>(images)); }

std::vector<AffineElement> labels_of(const GaloisModel& model, const Subgroup& h) {
  std::vector<AffineElement> out;
  for (const auto& p : h.elements()) out.push_back(*model.affine_label(p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineElement> to_affine(const std::vector<oracle::Pair>& pairs) {
  std::vector<AffineElement> out;
  for (auto [a, u] : pairs) {
    out.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(u)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Perm rejects non-permutations") {
  CHECK_THROWS_AS(P({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(P({0, 3, 1}), DomainError);
  CHECK_NOTHROW(P({2, 0, 1}));
}

TEST_CASE("compose applies the right factor first") {
  const auto id = Perm::identity(3);
  const auto p = P({1, 2, 0});
  CHECK(compose(id, p) == p);
  CHECK(compose(P({1, 2, 0}), P({2, 0, 1})).is_identity());
  CHECK(compose(P({1, 0, 2}), P({0, 2, 1})) == P({1, 2, 0}));
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(P({0, 1}), P({0, 1, 2})), DomainError);
}

TEST_CASE("close") {
  const Perm id4 = Perm::identity(4);
  CHECK(close(std::span(&id4, 1)).order() == 1);

  const Perm cycle = P({1, 2, 3, 0});
  CHECK(close(std::span(&cycle, 1)).order() == 4);

  const std::vector<Perm> gens{P({1, 2, 3, 0}), P({1, 0, 2, 3})};
  const Subgroup s4 = close(gens);
  CHECK(s4.order() == 24);
  // every permutation of 4 points is there
  std::vector<Label> images{0, 1, 2, 3};
  do {
    CHECK(s4.contains(Perm(images)));
  } while (std::next_permutation(images.begin(), images.end()));

  Budgets tight;
  tight.closure_elements = 10;
  try {
    close(gens, tight);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.progress() == 11);
  }
}

TEST_CASE("from_elements validates closure") {
  CHECK_THROWS_AS(Subgroup::from_elements({Perm::identity(3), P({1, 2, 0})}), DomainError);
  CHECK_THROWS_AS(Subgroup::from_elements({P({1, 0, 2})}), DomainError);
  const auto c3 = Subgroup::from_elements({Perm::identity(3), P({1, 2, 0}), P({2, 0, 1})});
  CHECK(c3.order() == 3);
  CHECK(c3.least_nontrivial() == P({1, 2, 0}));
}

TEST_CASE("stabilizer") {
  CHECK(stabilizer(Subgroup::trivial(5), 3).is_trivial());

  const auto s3 = symmetric_model(3).group();
  const auto h = stabilizer(s3, 0);
  CHECK(h.order() == 2);
  CHECK(h.contains(P({0, 2, 1})));

  const auto model = affine_model(9);
  CHECK(labels_of(model, stabilizer(model.group(), 0)) ==
        std::vector<AffineElement>{{0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 7}, {0, 8}});
  CHECK_THROWS_AS(stabilizer(model.group(), 9), DomainError);
}

TEST_CASE("pointwise stabilizer against the affine brute force") {
  const auto model = affine_model(9);
  const auto& g = model.group();
  CHECK(pointwise_stabilizer(g, {}) == g);

  const Label a[] = {0, 1};
  CHECK(pointwise_stabilizer(g, a).is_trivial());
  const Label b[] = {0, 3};
  const auto h = pointwise_stabilizer(g, b);
  CHECK(h.order() == 3);
  CHECK(labels_of(model, h) == std::vector<AffineElement>{{0, 1}, {0, 4}, {0, 7}});
  CHECK(labels_of(model, h) == to_affine(oracle::affine_fixing(9, {0, 3})));

  const Label out_of_range[] = {0, 9};
  CHECK_THROWS_AS(pointwise_stabilizer(g, out_of_range), DomainError);

  // random subsets on a larger model
  const auto big = affine_model(45);
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::vector<std::uint64_t> roots;
    std::vector<Label> labels;
    for (int i = 0; i < 1 + t % 3; ++i) {
      roots.push_back(rng() % 45);
      labels.push_back(static_cast<Label>(roots.back()));
    }
    CHECK(labels_of(big, pointwise_stabilizer(big.group(), labels)) ==
          to_affine(oracle::affine_fixing(45, roots)));
  }
}

TEST_CASE("intersect") {
  const auto model = affine_model(9);
  const auto& g = model.group();
  const auto h0 = stabilizer(g, 0);
  const auto h3 = stabilizer(g, 3);
  CHECK(intersect(h0, h0) == h0);
  CHECK(intersect(h0, Subgroup::trivial(9)).is_trivial());
  CHECK(intersect(h0, h3).order() == 3);
  CHECK_THROWS_AS(intersect(h0, Subgroup::trivial(4)), DomainError);
}

TEST_CASE("fixed points") {
  CHECK(fixed_points(Subgroup::trivial(4)) == RootSet{0, 1, 2, 3});
  CHECK(fixed_points(symmetric_model(3).group()).empty());
  const auto model = affine_model(9);
  CHECK(fixed_points(stabilizer(model.group(), 0)) == RootSet{0});
}

TEST_CASE("index") {
  const auto g9 = affine_model(9).group();
  CHECK(index(g9, g9) == 1);
  CHECK(index(g9, stabilizer(g9, 0)) == 9);

  const auto g105 = affine_model(105).group();
  const Label roots[] = {35, 21};
  CHECK(index(g105, pointwise_stabilizer(g105, roots)) == 840);

  CHECK_THROWS_AS(index(stabilizer(g9, 0), g9), DomainError);
}

TEST_CASE("transitivity and faithfulness") {
  CHECK(is_transitive(Subgroup::trivial(1)));
  CHECK(is_faithful(Subgroup::trivial(1)));
  CHECK_FALSE(is_transitive(Subgroup::trivial(2)));
  const auto g15 = affine_model(15).group();
  CHECK(is_transitive(g15));
  CHECK(is_faithful(g15));
}

TEST_CASE("orbit-stabilizer on every affine model up to 105") {
  for (std::uint64_t n = 3; n <= 105; n += 2) {
    const auto g = affine_model(n).group();
    for (std::size_t i = 0; i < n; ++i) {
      const auto label = static_cast<Label>(i);
      CHECK(g.order() == orbit(g, label).size() * stabilizer(g, label).order());
    }
  }
  for (std::uint64_t m = 2; m <= 6; ++m) {
    const auto g = symmetric_model(m).group();
    CHECK(g.order() == orbit(g, 0).size() * stabilizer(g, 0).order());
  }
}

TEST_CASE("stabilizer algebra on random root sets") {
  std::mt19937 rng(2024);
  for (std::uint64_t n : {15, 21, 27, 35}) {
    const auto g = affine_model(n).group();
    for (int t = 0; t < 25; ++t) {
      std::vector<Label> s1, s2, both;
      for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) s1.push_back(rng() % n);
      for (int i = 0; i < 1 + static_cast<int>(rng() % 3); ++i) s2.push_back(rng() % n);
      both = s1;
      both.insert(both.end(), s2.begin(), s2.end());

      const auto h1 = pointwise_stabilizer(g, s1);
      const auto h2 = pointwise_stabilizer(g, s2);
      const auto h12 = pointwise_stabilizer(g, both);
      CHECK(h12 == intersect(h1, h2));

      // fixed_points is antitone: h12 ⊆ h1
      const auto f1 = fixed_points(h1);
      const auto f12 = fixed_points(h12);
      CHECK(std::includes(f12.begin(), f12.end(), f1.begin(), f1.end()));

      // index grows as roots are added one by one
      std::uint64_t last = 1;
      std::vector<Label> prefix;
      for (Label x : both) {
        prefix.push_back(x);
        const auto idx = index(g, pointwise_stabilizer(g, prefix));
        CHECK(idx >= last);
        last = idx;
      }
    }
  }
}
