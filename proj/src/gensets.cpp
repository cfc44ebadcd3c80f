#include "rootcluster/gensets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "element_indices.hpp"
#include "rootcluster/clusters.hpp"
#include "rootcluster/errors.hpp"
#include "rootcluster/numtheory.hpp"

namespace rootcluster {

namespace {

RootSet checked_roots(const GaloisModel& model, std::span<const Label> roots, const char* where) {
  for (Label x : roots) {
    if (x >= model.n()) {
      throw DomainError(std::string(where) + ": root label " + std::to_string(x) +
                        " out of range for n=" + std::to_string(model.n()));
    }
  }
  return make_root_set({roots.begin(), roots.end()});
}

RootSet without(const RootSet& roots, Label x) {
  RootSet out;
  std::copy_if(roots.begin(), roots.end(), std::back_inserter(out),
               [x](Label y) { return y != x; });
  return out;
}

}  // namespace

GenerationCheck is_generating(const GaloisModel& model, std::span<const Label> roots) {
  const RootSet b = checked_roots(model, roots, "is_generating");
  const Subgroup residual = pointwise_stabilizer(model.group(), b);
  return {residual.is_trivial(), residual.least_nontrivial()};
}

GenSetReport is_minimal(const GaloisModel& model, std::span<const Label> roots) {
  GenSetReport report;
  report.roots = checked_roots(model, roots, "is_minimal");
  if (report.roots.empty()) throw DomainError("is_minimal: the root set must be nonempty");

  const auto generation = is_generating(model, report.roots);
  report.generates = generation.generates;
  if (!report.generates) {
    report.residual_witness = generation.witness;
    return report;
  }

  report.minimal = true;
  for (auto it = report.roots.rbegin(); it != report.roots.rend(); ++it) {
    const Label beta = *it;
    const Subgroup rest = pointwise_stabilizer(model.group(), without(report.roots, beta));
    const RootSet fixed = fixed_points(rest);
    const bool in_field_of_rest = std::binary_search(fixed.begin(), fixed.end(), beta);
    // beta lies in K(B \ {beta}) exactly when B \ {beta} already generates.
    if (in_field_of_rest != rest.is_trivial()) {
      throw InvariantError("fixed-point and triviality tests disagree for root " +
                           std::to_string(beta));
    }
    if (in_field_of_rest) {
      report.minimal = false;
      report.removable_root = beta;
      break;
    }
  }
  return report;
}

RootSet reduce_to_minimal(const GaloisModel& model, std::span<const Label> roots) {
  RootSet current = checked_roots(model, roots, "reduce_to_minimal");
  if (current.empty() || !is_generating(model, current).generates) {
    throw DomainError("reduce_to_minimal: the given roots do not generate the splitting field");
  }
  while (true) {
    const auto report = is_minimal(model, current);
    if (report.minimal) return current;
    current = without(current, *report.removable_root);
  }
}

namespace {

// Level-by-level search for minimal generating sets. Candidates of one size are
// built in ascending label order; a prefix is abandoned when the next root does
// not shrink its stabilizer (that root lies in the field of the prefix) or when
// the prefix already generates before reaching the target size: neither can
// extend to a minimal set. Roots sharing a cluster are never combined.
class MinimalSetSearch {
 public:
  MinimalSetSearch(const GaloisModel& model, const Budgets& budgets)
      : model_(model),
        budgets_(budgets),
        partition_(cluster_partition(model)),
        everything_(detail::all_indices(model.group())) {}

  std::size_t cluster_count() const { return partition_.s; }

  std::vector<RootSet> level(std::size_t size) {
    std::vector<RootSet> found;
    prefix_.clear();
    extend(size, 0, everything_, found);
    completed_ = size;
    for (const auto& b : found) check_distinct_clusters(b);
    return found;
  }

 private:
  void extend(std::size_t size, std::size_t start, const detail::ElementIndices& h,
              std::vector<RootSet>& found) {
    const Subgroup& g = model_.group();
    for (std::size_t x = start; x < model_.n(); ++x) {
      const auto label = static_cast<Label>(x);
      if (std::any_of(prefix_.begin(), prefix_.end(),
                      [&](Label y) { return partition_.same_cluster(y, label); })) {
        continue;
      }
      if (++tested_ > budgets_.subset_tests) {
        throw ResourceError("subset-test budget of " + std::to_string(budgets_.subset_tests) +
                                " exceeded; completed sizes 1.." + std::to_string(completed_),
                            tested_ - 1);
      }
      const auto next = detail::fixing(g, h, label);
      if (next.size() == h.size()) continue;
      prefix_.push_back(label);
      if (prefix_.size() == size) {
        if (next.size() == 1 && is_minimal(model_, prefix_).minimal) found.push_back(prefix_);
      } else if (next.size() > 1) {
        extend(size, x + 1, next, found);
      }
      prefix_.pop_back();
    }
  }

  void check_distinct_clusters(const RootSet& b) const {
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        if (partition_.same_cluster(b[i], b[j])) {
          throw InvariantError("minimal generating set with two roots in one cluster");
        }
      }
    }
  }

  const GaloisModel& model_;
  const Budgets& budgets_;
  ClusterPartition partition_;
  detail::ElementIndices everything_;
  RootSet prefix_;
  std::uint64_t tested_ = 0;
  std::size_t completed_ = 0;
};

}  // namespace

std::vector<RootSet> enumerate_minimal(const GaloisModel& model,
                                       std::optional<std::size_t> max_cardinality,
                                       const Budgets& budgets) {
  // K_f = K: the empty set is the only minimal generating set.
  if (model.group().is_trivial()) return {RootSet{}};
  MinimalSetSearch search(model, budgets);
  std::size_t top = search.cluster_count();
  if (max_cardinality) top = std::min(top, *max_cardinality);
  std::vector<RootSet> all;
  for (std::size_t size = 1; size <= top; ++size) {
    auto sets = search.level(size);
    all.insert(all.end(), sets.begin(), sets.end());
  }
  return all;
}

MinimumMinimal minimum_minimal(const GaloisModel& model, const Budgets& budgets) {
  if (model.group().is_trivial()) return {0, {RootSet{}}};
  MinimalSetSearch search(model, budgets);
  for (std::size_t size = 1; size <= search.cluster_count(); ++size) {
    auto sets = search.level(size);
    if (!sets.empty()) return {size, std::move(sets)};
  }
  throw InvariantError("no minimal generating set found; the model is not faithful");
}

bool gcd_pair_criterion(std::uint64_t n, std::uint64_t k, std::uint64_t l) {
  if (n < 3 || n % 2 == 0) throw DomainError("gcd_pair_criterion: n must be odd and >= 3");
  if (!(k < l && l < n)) throw DomainError("gcd_pair_criterion: need 0 <= k < l < n");
  return std::gcd(l - k, n) == 1;
}

TwoSizedMinimalSets two_sized_minimal_sets(std::span<const std::uint64_t> primes) {
  if (primes.size() <= 2) {
    throw DomainError("two_sized_minimal_sets: need more than two primes (k > 2)");
  }
  std::set<std::uint64_t> distinct;
  std::uint64_t n = 1;
  for (auto p : primes) {
    if (p == 2 || !nt::is_prime(p)) {
      throw DomainError("two_sized_minimal_sets: " + std::to_string(p) + " is not an odd prime");
    }
    if (!distinct.insert(p).second) {
      throw DomainError("two_sized_minimal_sets: repeated prime " + std::to_string(p));
    }
    n = nt::checked_mul(n, p);
  }
  if (n > kMaxDegree) throw DomainError("two_sized_minimal_sets: n exceeds 65535 roots");

  TwoSizedMinimalSets out;
  out.n = n;
  out.pair = {0, 1};
  for (auto p : primes) out.cofactor_in_prime_order.push_back(static_cast<Label>(n / p));
  out.cofactor = make_root_set(out.cofactor_in_prime_order);
  return out;
}

}  // namespace rootcluster
