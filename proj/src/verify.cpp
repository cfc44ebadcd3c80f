#include "rootcluster/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "rootcluster/closed_forms.hpp"
#include "rootcluster/clusters.hpp"
#include "rootcluster/errors.hpp"
#include "rootcluster/gensets.hpp"
#include "rootcluster/numtheory.hpp"
#include "rootcluster/towers.hpp"

namespace rootcluster {

using nlohmann::json;

namespace {

struct Outcome {
  json claimed;
  json observed;
  json details = json::object();
};

using Check = std::function<Outcome(const VerifyParams&, const Budgets&)>;

std::uint64_t require_n(const VerifyParams& p, const std::string& id) {
  if (!p.n) throw DomainError(id + " needs --n");
  return *p.n;
}

std::uint64_t require_k(const VerifyParams& p, const std::string& id) {
  if (!p.k) throw DomainError(id + " needs --k");
  return *p.k;
}

const std::vector<std::uint64_t>& require_primes(const VerifyParams& p, const std::string& id,
                                                 std::size_t at_least) {
  if (p.primes.size() < at_least) {
    throw DomainError(id + " needs --primes with at least " + std::to_string(at_least) +
                      " distinct odd primes");
  }
  std::set<std::uint64_t> seen;
  for (auto q : p.primes) {
    if (q == 2 || !nt::is_prime(q) || !seen.insert(q).second) {
      throw DomainError(id + ": primes must be distinct odd primes");
    }
  }
  return p.primes;
}

GaloisModel require_model(const VerifyParams& p, const std::string& id, const Budgets& budgets) {
  if (!p.model) throw DomainError(id + " needs a model (--affine, --symmetric or --cyclic)");
  return build_model(*p.model, budgets);
}

std::uint64_t product(std::span<const std::uint64_t> primes) {
  std::uint64_t n = 1;
  for (auto q : primes) n = nt::checked_mul(n, q);
  return n;
}

json sets_json(const std::vector<RootSet>& sets) {
  json out = json::array();
  for (const auto& b : sets) out.push_back(b);
  return out;
}

// The group of x^n - c: order n*phi(n), transitive, faithful, labels form a
// homomorphism, and the closed-form stabilizers H_j match brute force. The
// order is observed by closing the translation and the unit scalings.
Outcome check_affine_model(const VerifyParams& p, const Budgets& budgets) {
  const auto n = require_n(p, "affine-model");
  const GaloisModel model = affine_model(n, budgets);
  const Subgroup& g = model.group();

  std::vector<Perm> generators{model.affine_perm({1, 1})};
  for (std::uint32_t u = 2; u < n; ++u) {
    if (std::gcd<std::uint64_t>(u, n) == 1) generators.push_back(model.affine_perm({0, u}));
  }
  const Subgroup closed = close(generators, budgets);

  std::size_t homomorphism_failures = 0;
  const auto check_pair = [&](std::size_t a, std::size_t b) {
    const auto x = *model.affine_label(g[a]);
    const auto y = *model.affine_label(g[b]);
    const auto via_law = affine_compose(x, y, n);
    if (model.affine_label(compose(g[a], g[b])) != via_law) ++homomorphism_failures;
  };
  if (n <= 15) {
    for (std::size_t a = 0; a < g.order(); ++a) {
      for (std::size_t b = 0; b < g.order(); ++b) check_pair(a, b);
    }
  } else {
    std::mt19937_64 rng(n);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    for (int t = 0; t < 10'000; ++t) check_pair(pick(rng), pick(rng));
  }

  std::size_t stabilizer_mismatches = 0;
  for (std::uint64_t j = 0; j < n; ++j) {
    const auto label = static_cast<Label>(j);
    if (!(affine_H_j(n, label) == stabilizer(g, label))) ++stabilizer_mismatches;
  }

  Outcome out;
  out.claimed = {{"order", nt::checked_mul(n, nt::euler_phi(n))},
                 {"transitive", true},
                 {"faithful", true},
                 {"closure_equals_model", true},
                 {"homomorphism_failures", 0},
                 {"stabilizer_mismatches", 0}};
  out.observed = {{"order", closed.order()},
                  {"transitive", is_transitive(g)},
                  {"faithful", is_faithful(g)},
                  {"closure_equals_model", closed == g},
                  {"homomorphism_failures", homomorphism_failures},
                  {"stabilizer_mismatches", stabilizer_mismatches}};
  return out;
}

// {a*zeta^k, a*zeta^l} generates iff gcd(l - k, n) == 1, over all pairs.
Outcome check_pair_criterion(const VerifyParams& p, const Budgets& budgets) {
  const auto n = require_n(p, "pair-criterion");
  const GaloisModel model = affine_model(n, budgets);
  std::uint64_t generating = 0;
  std::uint64_t mismatches = 0;
  json first_mismatch = nullptr;
  for (std::uint64_t k = 0; k < n; ++k) {
    for (std::uint64_t l = k + 1; l < n; ++l) {
      const Label pair[] = {static_cast<Label>(k), static_cast<Label>(l)};
      const bool observed = is_generating(model, pair).generates;
      generating += observed ? 1 : 0;
      if (observed != gcd_pair_criterion(n, k, l)) {
        if (mismatches++ == 0) first_mismatch = json::array({k, l});
      }
    }
  }
  Outcome out;
  out.claimed = {{"generating_pairs", closed_forms::minimum_minimal_count(n)}, {"mismatches", 0}};
  out.observed = {{"generating_pairs", generating}, {"mismatches", mismatches}};
  out.details["first_mismatch"] = first_mismatch;
  return out;
}

// n*phi(n)/2 minimum minimal generating sets, all of size 2.
Outcome check_minimum_minimal_count(const VerifyParams& p, const Budgets& budgets) {
  const auto n = require_n(p, "minimum-minimal-count");
  const GaloisModel model = affine_model(n, budgets);
  const auto found = minimum_minimal(model, budgets);
  Outcome out;
  out.claimed = {{"cardinality", 2}, {"count", closed_forms::minimum_minimal_count(n)}};
  out.observed = {{"cardinality", found.cardinality}, {"count", found.count()}};
  return out;
}

// For prime p the C(p, 2) pairs are all the minimal generating sets.
Outcome check_prime_minimal_sets(const VerifyParams& p, const Budgets& budgets) {
  const auto n = require_n(p, "prime-minimal-sets");
  if (!nt::is_prime(n) || n == 2) throw DomainError("prime-minimal-sets needs an odd prime n");
  const GaloisModel model = affine_model(n, budgets);
  const auto all = enumerate_minimal(model, std::nullopt, budgets);

  std::vector<RootSet> pairs;
  for (std::uint64_t k = 0; k < n; ++k) {
    for (std::uint64_t l = k + 1; l < n; ++l) {
      pairs.push_back({static_cast<Label>(k), static_cast<Label>(l)});
    }
  }
  std::size_t largest = 0;
  for (const auto& b : all) largest = std::max(largest, b.size());

  Outcome out;
  out.claimed = {{"count", nt::binomial(n, 2)}, {"largest", 2}, {"sets", sets_json(pairs)}};
  out.observed = {{"count", all.size()}, {"largest", largest}, {"sets", sets_json(all)}};
  return out;
}

// {a, a*zeta} and {a*zeta^(n/p_i)} are both minimal, of sizes 2 and k; dropping
// n/p_l from the second leaves a residual element (0, (n/p_l) z + 1).
Outcome check_two_sized_sets(const VerifyParams& p, const Budgets& budgets) {
  const auto& primes = require_primes(p, "two-sized-minimal-sets", 3);
  const auto sets = two_sized_minimal_sets(primes);
  const GaloisModel model = affine_model(sets.n, budgets);

  const auto pair_report = is_minimal(model, sets.pair);
  const auto cofactor_report = is_minimal(model, sets.cofactor);

  json residual_found = json::array();
  json residual_examples = json::array();
  for (std::size_t l = 0; l < primes.size(); ++l) {
    const auto dropped = sets.cofactor_in_prime_order[l];
    RootSet rest;
    for (Label x : sets.cofactor) {
      if (x != dropped) rest.push_back(x);
    }
    const Subgroup residual = pointwise_stabilizer(model.group(), rest);
    std::optional<AffineElement> example;
    for (const auto& e : residual.elements()) {
      const auto label = *model.affine_label(e);
      if (label.alpha != 0 || label.u == 1) continue;
      // u = (n/p_l) z + 1 with 1 <= z <= p_l - 1
      const std::uint64_t z = (label.u + sets.n - 1) % sets.n;
      if (z % dropped == 0 && z / dropped >= 1 && z / dropped <= primes[l] - 1) {
        example = label;
        break;
      }
    }
    residual_found.push_back(example.has_value());
    residual_examples.push_back(example ? json::array({example->alpha, example->u}) : json());
  }

  Outcome out;
  out.claimed = {{"pair", {{"roots", sets.pair}, {"size", 2}, {"minimal", true}}},
                 {"cofactor",
                  {{"roots", sets.cofactor}, {"size", primes.size()}, {"minimal", true}}},
                 {"residual_elements", std::vector<bool>(primes.size(), true)}};
  out.observed = {
      {"pair",
       {{"roots", pair_report.roots}, {"size", pair_report.roots.size()},
        {"minimal", pair_report.minimal}}},
      {"cofactor",
       {{"roots", cofactor_report.roots}, {"size", cofactor_report.roots.size()},
        {"minimal", cofactor_report.minimal}}},
      {"residual_elements", residual_found}};
  out.details["n"] = sets.n;
  out.details["residual_examples"] = residual_examples;
  return out;
}

// S_{k+1}: the k+1 complements of a single root are all the minimal sets, and
// they are the minimum ones.
Outcome check_symmetric_minimum(const VerifyParams& p, const Budgets& budgets) {
  const auto k = require_k(p, "symmetric-minimum");
  if (k < 2) throw DomainError("symmetric-minimum needs k >= 2");
  const GaloisModel model = symmetric_model(k + 1, budgets);
  const auto all = enumerate_minimal(model, std::nullopt, budgets);
  const auto minimum = minimum_minimal(model, budgets);

  std::vector<RootSet> complements;
  for (std::uint64_t i = 0; i <= k; ++i) {
    RootSet b;
    for (std::uint64_t j = 0; j <= k; ++j) {
      if (j != i) b.push_back(static_cast<Label>(j));
    }
    complements.push_back(b);
  }
  std::sort(complements.begin(), complements.end());

  Outcome out;
  out.claimed = {{"minimum_cardinality", k}, {"minimum_count", k + 1},
                 {"all_minimal_sets", sets_json(complements)}};
  out.observed = {{"minimum_cardinality", minimum.cardinality},
                  {"minimum_count", minimum.count()},
                  {"all_minimal_sets", sets_json(all)}};
  return out;
}

bool chains_equal(const Tower& a, const Tower& b) { return a.distinct_fields == b.distinct_fields; }

// Every ordering of a minimal set B gives a tower of length |B|+1, the |B|!
// towers are pairwise distinct, and adding a root from a new cluster gives a
// generating, non-minimal set with at least one shorter tower.
Outcome check_minimal_set_towers(const VerifyParams& p, const Budgets& budgets) {
  const GaloisModel model = require_model(p, "minimal-set-towers", budgets);
  const ClusterPartition partition = cluster_partition(model);
  const auto minimal_sets = enumerate_minimal(model, std::nullopt, budgets);

  std::uint64_t length_violations = 0;
  std::uint64_t distinctness_violations = 0;
  std::uint64_t superset_violations = 0;
  std::uint64_t towers_checked = 0;
  std::uint64_t supersets_checked = 0;
  for (const auto& b : minimal_sets) {
    const auto towers = towers_of_set(model, b, budgets);
    towers_checked += towers.size();
    if (towers.size() != nt::factorial(b.size())) ++distinctness_violations;
    for (const auto& t : towers) {
      if (!t.terminates || t.length() != b.size() + 1) ++length_violations;
    }
    for (std::size_t i = 0; i < towers.size(); ++i) {
      for (std::size_t j = i + 1; j < towers.size(); ++j) {
        if (chains_equal(towers[i], towers[j])) ++distinctness_violations;
      }
    }

    for (Label rep : representatives(partition)) {
      if (std::any_of(b.begin(), b.end(),
                      [&](Label x) { return partition.same_cluster(x, rep); })) {
        continue;
      }
      RootSet bigger = b;
      bigger.push_back(rep);
      bigger = make_root_set(bigger);
      ++supersets_checked;
      const auto report = is_minimal(model, bigger);
      const auto bigger_towers = towers_of_set(model, bigger, budgets);
      const bool has_shorter =
          std::any_of(bigger_towers.begin(), bigger_towers.end(),
                      [&](const Tower& t) { return t.length() < bigger.size() + 1; });
      if (!report.generates || report.minimal || !has_shorter) ++superset_violations;
    }
  }

  Outcome out;
  out.claimed = {{"length_violations", 0},
                 {"distinctness_violations", 0},
                 {"superset_violations", 0}};
  out.observed = {{"length_violations", length_violations},
                  {"distinctness_violations", distinctness_violations},
                  {"superset_violations", superset_violations}};
  out.details = {{"minimal_sets", minimal_sets.size()},
                 {"towers_checked", towers_checked},
                 {"supersets_checked", supersets_checked}};
  return out;
}

// A unique cluster tower exactly when K(alpha)/K is Galois, i.e. one cluster.
// Then the tower is K ⊆ K_f with degree sequence (n).
Outcome check_unique_tower(const VerifyParams& p, const Budgets& budgets) {
  const GaloisModel model = require_model(p, "unique-tower", budgets);
  const bool galois = cluster_of(model, 0).size() == model.n();
  const auto census = enumerate_distinct_towers(model, budgets, true);

  Outcome out;
  out.claimed = {{"unique", galois}, {"at_least_two", !galois}};
  out.observed = {{"unique", census.count == 1}, {"at_least_two", census.count >= 2}};
  if (galois) {
    out.claimed["length"] = 2;
    out.claimed["degree_sequence"] = std::vector<std::uint64_t>{model.n()};
    out.observed["length"] = census.towers.empty() ? 0 : census.towers.front().length();
    out.observed["degree_sequence"] =
        census.towers.empty() ? std::vector<std::uint64_t>{} : census.towers.front().degree_sequence;
  }
  out.details["towers"] = census.count;
  return out;
}

// For i >= 2, the field of the first i cofactor roots is Q(a, zeta^(n/(p_1...p_i))).
Outcome check_intermediate_fields(const VerifyParams& p, const Budgets& budgets) {
  const auto& primes = require_primes(p, "intermediate-fields", 2);
  const auto checks = rootcluster::check_intermediate_fields(primes, budgets);
  json matches = json::array();
  json orders = json::array();
  for (const auto& c : checks) {
    matches.push_back(c.matches);
    orders.push_back(c.stabilizer_order);
  }
  Outcome out;
  out.claimed = {{"matches", std::vector<bool>(checks.size(), true)},
                 {"stabilizer_orders", closed_forms::cofactor_stabilizer_orders(primes)}};
  out.observed = {{"matches", matches}, {"stabilizer_orders", orders}};
  return out;
}

std::vector<Label> cofactor_ordering(std::span<const std::uint64_t> primes) {
  const auto n = product(primes);
  std::vector<Label> ordering;
  for (auto q : primes) ordering.push_back(static_cast<Label>(n / q));
  return ordering;
}

// Degree sequence of the cofactor tower in the given order and with the second
// and third primes swapped.
Outcome check_degree_sequence(const VerifyParams& p, const Budgets& budgets) {
  const auto& primes = require_primes(p, "degree-sequence", 3);
  const GaloisModel model = affine_model(product(primes), budgets);
  std::vector<std::uint64_t> swapped = primes;
  std::swap(swapped[1], swapped[2]);

  const Tower given = build_tower(model, cofactor_ordering(primes));
  const Tower reordered = build_tower(model, cofactor_ordering(swapped));
  Outcome out;
  out.claimed = {{"given_order", closed_forms::cofactor_degree_sequence(primes)},
                 {"swapped_order", closed_forms::cofactor_degree_sequence(swapped)},
                 {"length", primes.size() + 1}};
  out.observed = {{"given_order", given.degree_sequence},
                  {"swapped_order", reordered.degree_sequence},
                  {"length", given.length()}};
  return out;
}

// Roots lying in each field of the cofactor tower.
Outcome check_root_capacity(const VerifyParams& p, const Budgets& budgets) {
  const auto& primes = require_primes(p, "root-capacity", 2);
  const GaloisModel model = affine_model(product(primes), budgets);
  const Tower tower = build_tower(model, cofactor_ordering(primes));
  std::vector<std::uint64_t> capacities;
  for (std::size_t i = 1; i < tower.chain.size(); ++i) {
    capacities.push_back(root_capacity(model, tower.chain[i]));
  }
  Outcome out;
  out.claimed = {{"capacities", closed_forms::cofactor_root_capacities(primes)}};
  out.observed = {{"capacities", capacities}};
  return out;
}

// x^n - c: n least-length towers, each of length 3 with degrees (n, n*phi(n));
// for prime n these are all the towers.
Outcome check_least_length_towers(const VerifyParams& p, const Budgets& budgets) {
  const auto n = require_n(p, "least-length-towers");
  const GaloisModel model = affine_model(n, budgets);
  const auto least = min_length_towers(model, budgets, true);

  std::set<std::vector<std::uint64_t>> degree_sequences;
  RootSet first_roots;
  for (const auto& t : least.towers) {
    degree_sequences.insert(t.degree_sequence);
    first_roots.push_back(t.ordering.front());
  }
  first_roots = make_root_set(first_roots);

  Outcome out;
  out.claimed = {{"least_length", closed_forms::kAffineLeastLength},
                 {"count", closed_forms::affine_least_length_count(n)},
                 {"degree_sequences", json::array({closed_forms::affine_least_degree_sequence(n)})},
                 {"first_roots_cover_all", true}};
  out.observed = {{"least_length", least.least_length},
                  {"count", least.count},
                  {"degree_sequences", degree_sequences},
                  {"first_roots_cover_all", first_roots.size() == n}};
  if (nt::is_prime(n)) {
    out.claimed["total_towers"] = n;
    out.observed["total_towers"] = enumerate_distinct_towers(model, budgets, false).count;
  }
  return out;
}

// S_{k+1}: (k+1)!/2 distinct cluster towers.
Outcome check_symmetric_tower_count(const VerifyParams& p, const Budgets& budgets) {
  const auto k = require_k(p, "symmetric-tower-count");
  if (k < 1) throw DomainError("symmetric-tower-count needs k >= 1");
  const GaloisModel model = symmetric_model(k + 1, budgets);
  const auto census = enumerate_distinct_towers(model, budgets, true);
  std::uint64_t pairwise_equal = 0;
  for (std::size_t i = 0; i < census.towers.size(); ++i) {
    for (std::size_t j = i + 1; j < census.towers.size(); ++j) {
      if (chains_equal(census.towers[i], census.towers[j])) ++pairwise_equal;
    }
  }
  Outcome out;
  out.claimed = {{"towers", closed_forms::symmetric_tower_count(k + 1)},
                 {"listed", closed_forms::symmetric_tower_count(k + 1)},
                 {"duplicates", 0}};
  out.observed = {{"towers", census.count},
                  {"listed", census.towers.size()},
                  {"duplicates", pairwise_equal}};
  return out;
}

// Structural facts that hold for every model.
Outcome check_structural(const VerifyParams& p, const Budgets& budgets) {
  const GaloisModel model = require_model(p, "structural-invariants", budgets);
  const std::size_t n = model.n();
  const ClusterPartition partition = cluster_partition(model);

  std::uint64_t partition_violations = partition.r * partition.s == n ? 0 : 1;

  std::vector<RootSet> cluster(n);
  for (std::size_t i = 0; i < n; ++i) cluster[i] = cluster_of(model, static_cast<Label>(i));
  const auto in = [&](std::size_t i, std::size_t j) {
    return std::binary_search(cluster[i].begin(), cluster[i].end(), static_cast<Label>(j));
  };
  std::uint64_t relation_violations = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in(i, i)) ++relation_violations;
    for (std::size_t j = 0; j < n; ++j) {
      if (in(i, j) && !in(j, i)) ++relation_violations;
      if (!in(i, j)) continue;
      for (std::size_t l : cluster[j]) {
        if (!in(i, l)) ++relation_violations;
      }
    }
  }

  const auto minimal_sets = enumerate_minimal(model, std::nullopt, budgets);
  std::uint64_t cluster_violations = 0;
  for (const auto& b : minimal_sets) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (in(b[i], b[j])) ++cluster_violations;
      }
    }
  }

  const auto census = enumerate_distinct_towers(model, budgets, true);
  std::uint64_t degree_violations = 0;
  const auto order = model.group().order();
  for (const auto& t : census.towers) {
    const auto& d = t.degree_sequence;
    if (!std::is_sorted(d.begin(), d.end()) ||
        std::adjacent_find(d.begin(), d.end()) != d.end()) {
      ++degree_violations;
    }
    for (auto x : d) {
      if (order % x != 0) ++degree_violations;
    }
    if (t.terminates != (!d.empty() && d.back() == order)) ++degree_violations;
  }

  const auto minimum = minimum_minimal(model, budgets);
  const auto least = min_length_towers(model, budgets, false);

  Outcome out;
  out.claimed = {{"partition_violations", 0},
                 {"relation_violations", 0},
                 {"minimal_set_cluster_violations", 0},
                 {"degree_sequence_violations", 0},
                 {"least_tower_length", minimum.cardinality + 1}};
  out.observed = {{"partition_violations", partition_violations},
                  {"relation_violations", relation_violations},
                  {"minimal_set_cluster_violations", cluster_violations},
                  {"degree_sequence_violations", degree_violations},
                  {"least_tower_length", least.least_length}};
  out.details = {{"r", partition.r},
                 {"s", partition.s},
                 {"minimal_sets", minimal_sets.size()},
                 {"towers", census.count}};
  return out;
}

const std::map<std::string, Check>& registry() {
  static const std::map<std::string, Check> checks = {
      {"affine-model", check_affine_model},
      {"pair-criterion", check_pair_criterion},
      {"minimum-minimal-count", check_minimum_minimal_count},
      {"prime-minimal-sets", check_prime_minimal_sets},
      {"two-sized-minimal-sets", check_two_sized_sets},
      {"symmetric-minimum", check_symmetric_minimum},
      {"minimal-set-towers", check_minimal_set_towers},
      {"unique-tower", check_unique_tower},
      {"intermediate-fields", check_intermediate_fields},
      {"degree-sequence", check_degree_sequence},
      {"root-capacity", check_root_capacity},
      {"least-length-towers", check_least_length_towers},
      {"symmetric-tower-count", check_symmetric_tower_count},
      {"structural-invariants", check_structural},
  };
  return checks;
}

ModelSpec spec_of(ModelSpec::Kind kind, std::uint64_t parameter) {
  ModelSpec spec;
  spec.kind = kind;
  spec.parameter = parameter;
  return spec;
}

}  // namespace

json VerifyParams::to_json() const {
  json out = json::object();
  if (n) out["n"] = *n;
  if (!primes.empty()) out["primes"] = primes;
  if (k) out["k"] = *k;
  if (model) out["model"] = describe(*model);
  return out;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "affine-model",        "pair-criterion",        "minimum-minimal-count",
      "prime-minimal-sets",  "two-sized-minimal-sets", "symmetric-minimum",
      "minimal-set-towers",  "unique-tower",          "intermediate-fields",
      "degree-sequence",     "root-capacity",         "least-length-towers",
      "symmetric-tower-count", "structural-invariants",
  };
  return ids;
}

const char* to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::pass:
      return "pass";
    case ReportStatus::fail:
      return "fail";
    case ReportStatus::skipped:
      break;
  }
  return "skipped";
}

TheoremReport verify_theorem(const std::string& id, const VerifyParams& params,
                             const Budgets& budgets) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw DomainError("unknown theorem id '" + id + "'");

  TheoremReport report;
  report.id = id;
  report.parameters = params;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = it->second(params, budgets);
    report.claimed = std::move(outcome.claimed);
    report.observed = std::move(outcome.observed);
    report.details = std::move(outcome.details);
    report.status = report.claimed == report.observed ? ReportStatus::pass : ReportStatus::fail;
  } catch (const ResourceError& e) {
    report.status = ReportStatus::skipped;
    report.budget_exceeded = true;
    report.skip_reason = e.what();
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<VerifyRequest> default_battery() {
  using Kind = ModelSpec::Kind;
  std::vector<VerifyRequest> out;
  const auto with_n = [&](const char* id, std::uint64_t n) {
    VerifyParams p;
    p.n = n;
    out.push_back({id, p});
  };
  const auto with_k = [&](const char* id, std::uint64_t k) {
    VerifyParams p;
    p.k = k;
    out.push_back({id, p});
  };
  const auto with_primes = [&](const char* id, std::vector<std::uint64_t> primes) {
    VerifyParams p;
    p.primes = std::move(primes);
    out.push_back({id, p});
  };
  const auto with_model = [&](const char* id, Kind kind, std::uint64_t parameter) {
    VerifyParams p;
    p.model = spec_of(kind, parameter);
    out.push_back({id, p});
  };

  for (std::uint64_t n = 3; n <= 105; n += 2) with_n("affine-model", n);
  for (std::uint64_t n = 3; n <= 45; n += 2) with_n("pair-criterion", n);
  for (std::uint64_t n : {3, 5, 7, 9, 15, 21, 25, 27, 33, 45}) with_n("minimum-minimal-count", n);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) with_n("prime-minimal-sets", p);
  for (auto primes : std::vector<std::vector<std::uint64_t>>{
           {3, 5, 7}, {3, 5, 11}, {3, 7, 11}, {3, 5, 7, 11}}) {
    with_primes("two-sized-minimal-sets", primes);
  }
  for (std::uint64_t k : {2, 3, 4}) with_k("symmetric-minimum", k);
  for (std::uint64_t n : {9, 15, 21}) with_model("minimal-set-towers", Kind::affine, n);
  for (std::uint64_t m : {4, 5}) with_model("minimal-set-towers", Kind::symmetric, m);
  for (std::uint64_t n : {3, 5, 7}) with_model("unique-tower", Kind::cyclic, n);
  for (std::uint64_t n : {3, 9, 15}) with_model("unique-tower", Kind::affine, n);
  for (std::uint64_t m : {4, 5}) with_model("unique-tower", Kind::symmetric, m);
  with_primes("intermediate-fields", {3, 5, 7});
  with_primes("intermediate-fields", {3, 5});
  with_primes("degree-sequence", {3, 5, 7});
  with_primes("root-capacity", {3, 5, 7});
  for (std::uint64_t n : {5, 9, 15}) with_n("least-length-towers", n);
  for (std::uint64_t k : {3, 4}) with_k("symmetric-tower-count", k);
  for (std::uint64_t n : {3, 5, 7, 9, 15, 21}) with_model("structural-invariants", Kind::affine, n);
  for (std::uint64_t m : {4, 5}) with_model("structural-invariants", Kind::symmetric, m);
  for (std::uint64_t n : {3, 5, 7}) with_model("structural-invariants", Kind::cyclic, n);
  return out;
}

std::vector<TheoremReport> verify_all(const std::vector<VerifyRequest>& requests,
                                      const Budgets& budgets) {
  std::vector<TheoremReport> reports;
  reports.reserve(requests.size());
  for (const auto& request : requests) {
    try {
      reports.push_back(verify_theorem(request.id, request.params, budgets));
    } catch (const DomainError& e) {
      TheoremReport skipped;
      skipped.id = request.id;
      skipped.parameters = request.params;
      skipped.status = ReportStatus::skipped;
      skipped.skip_reason = e.what();
      reports.push_back(std::move(skipped));
    }
  }
  return reports;
}

int exit_code(const std::vector<TheoremReport>& reports) {
  const auto any = [&](auto pred) { return std::any_of(reports.begin(), reports.end(), pred); };
  if (any([](const TheoremReport& r) { return r.status == ReportStatus::fail; })) return 1;
  if (any([](const TheoremReport& r) { return r.budget_exceeded; })) return 2;
  if (any([](const TheoremReport& r) { return r.status == ReportStatus::skipped; })) return 1;
  return 0;
}

}  // namespace rootcluster
