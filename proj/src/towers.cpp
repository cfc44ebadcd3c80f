#include "rootcluster/towers.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "element_indices.hpp"
#include "rootcluster/clusters.hpp"
#include "rootcluster/errors.hpp"
#include "rootcluster/numtheory.hpp"

namespace rootcluster {

namespace {

Tower build_tower_with(const GaloisModel& model, const ClusterPartition& partition,
                       std::span<const Label> ordering) {
  if (ordering.empty()) throw DomainError("build_tower: the ordering must be nonempty");
  for (Label x : ordering) {
    if (x >= model.n()) {
      throw DomainError("build_tower: root label " + std::to_string(x) + " out of range for n=" +
                        std::to_string(model.n()));
    }
  }
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    for (std::size_t j = i + 1; j < ordering.size(); ++j) {
      if (partition.same_cluster(ordering[i], ordering[j])) {
        throw DomainError("build_tower: roots " + std::to_string(ordering[i]) + " and " +
                          std::to_string(ordering[j]) +
                          " share a cluster; roots of a minimal generating set lie in distinct "
                          "clusters");
      }
    }
  }

  const Subgroup& g = model.group();
  Tower tower;
  tower.ordering.assign(ordering.begin(), ordering.end());
  tower.chain.push_back(g);
  tower.distinct_fields.push_back(g);
  for (Label x : ordering) {
    Subgroup next = stabilizer(tower.chain.back(), x);
    if (next.order() != tower.distinct_fields.back().order()) {
      tower.distinct_fields.push_back(next);
      tower.degree_sequence.push_back(index(g, next));
    }
    tower.chain.push_back(std::move(next));
  }
  tower.terminates = tower.chain.back().is_trivial();
  if (!tower.terminates) tower.residual_witness = tower.chain.back().least_nontrivial();
  return tower;
}

// Distinct chains G > H_1 > ... > 1 where each step intersects with the
// stabilizer of one more cluster representative. The continuations from a
// subgroup depend on that subgroup alone: representatives it already fixes add
// no field. So counts and depths are memoized per subgroup.
class ChainSearch {
 public:
  ChainSearch(const GaloisModel& model, const Budgets& budgets)
      : model_(model),
        budgets_(budgets),
        partition_(cluster_partition(model)),
        reps_(representatives(partition_)) {}

  struct Step {
    Label root;
    detail::ElementIndices subgroup;
  };

  struct Summary {
    std::uint64_t chains = 0;        // distinct chains down to the trivial group
    std::size_t depth = 0;           // fewest steps down to the trivial group
    std::uint64_t shortest = 0;      // chains achieving `depth`
  };

  const Summary& summarize(const detail::ElementIndices& h) {
    if (auto it = memo_.find(h); it != memo_.end()) return it->second;
    Summary summary;
    if (h.size() == 1) {
      summary = {1, 0, 1};
    } else {
      summary.depth = std::numeric_limits<std::size_t>::max();
      for (const auto& step : children(h)) {
        const Summary child = summarize(step.subgroup);
        summary.chains = add(summary.chains, child.chains);
        if (child.depth + 1 < summary.depth) {
          summary.depth = child.depth + 1;
          summary.shortest = child.shortest;
        } else if (child.depth + 1 == summary.depth) {
          summary.shortest = add(summary.shortest, child.shortest);
        }
      }
      if (summary.chains == 0) {
        throw InvariantError("a nontrivial subgroup fixes every cluster representative");
      }
    }
    return memo_.emplace(h, summary).first->second;
  }

  // Distinct next subgroups, each with the smallest representative reaching it.
  std::vector<Step> children(const detail::ElementIndices& h) const {
    std::map<detail::ElementIndices, Label> seen;
    for (Label r : reps_) {
      auto next = detail::fixing(model_.group(), h, r);
      if (next.size() == h.size()) continue;
      seen.try_emplace(std::move(next), r);
    }
    std::vector<Step> out;
    for (auto& [subgroup, root] : seen) out.push_back({root, subgroup});
    std::sort(out.begin(), out.end(),
              [](const Step& a, const Step& b) { return a.root < b.root; });
    return out;
  }

  // Lists chains depth-first. With `shortest_only`, follows only steps that stay
  // on a shortest route to the trivial group.
  std::vector<Tower> list(bool shortest_only) {
    std::vector<Tower> out;
    std::vector<Label> path;
    std::uint64_t nodes = 0;
    walk(detail::all_indices(model_.group()), shortest_only, path, nodes, out);
    return out;
  }

  const ClusterPartition& partition() const { return partition_; }

 private:
  void walk(const detail::ElementIndices& h, bool shortest_only, std::vector<Label>& path,
            std::uint64_t& nodes, std::vector<Tower>& out) {
    if (++nodes > budgets_.tower_nodes) {
      throw ResourceError("tower DFS budget of " + std::to_string(budgets_.tower_nodes) +
                              " nodes exceeded after " + std::to_string(out.size()) + " towers",
                          out.size());
    }
    if (h.size() == 1) {
      out.push_back(realize(path));
      return;
    }
    const std::size_t depth = summarize(h).depth;
    for (const auto& step : children(h)) {
      if (shortest_only && summarize(step.subgroup).depth + 1 != depth) continue;
      path.push_back(step.root);
      walk(step.subgroup, shortest_only, path, nodes, out);
      path.pop_back();
    }
  }

  // Completes `path` with the unused representatives and builds the tower.
  Tower realize(const std::vector<Label>& path) const {
    std::vector<Label> ordering = path;
    for (Label r : reps_) {
      if (std::find(path.begin(), path.end(), r) == path.end()) ordering.push_back(r);
    }
    Tower tower = build_tower_with(model_, partition_, ordering);
    if (tower.length() != path.size() + 1 || !tower.terminates) {
      throw InvariantError("realized tower does not match its chain");
    }
    return tower;
  }

  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
      throw ResourceError("tower count overflows 64 bits", 0);
    }
    return out;
  }

  const GaloisModel& model_;
  const Budgets& budgets_;
  ClusterPartition partition_;
  std::vector<Label> reps_;
  std::map<detail::ElementIndices, Summary> memo_;
};

}  // namespace

Tower build_tower(const GaloisModel& model, std::span<const Label> ordering) {
  return build_tower_with(model, cluster_partition(model), ordering);
}

std::vector<Tower> towers_of_set(const GaloisModel& model, std::span<const Label> roots,
                                 const Budgets& budgets) {
  std::vector<Label> ordering(roots.begin(), roots.end());
  std::sort(ordering.begin(), ordering.end());
  if (std::adjacent_find(ordering.begin(), ordering.end()) != ordering.end()) {
    throw DomainError("towers_of_set: repeated root label");
  }
  if (ordering.size() > 20 || nt::factorial(ordering.size()) > budgets.orderings) {
    throw ResourceError("towers_of_set: " + std::to_string(ordering.size()) +
                            "! orderings exceed the budget of " +
                            std::to_string(budgets.orderings),
                        0);
  }
  const ClusterPartition partition = cluster_partition(model);
  std::vector<Tower> towers;
  do {
    towers.push_back(build_tower_with(model, partition, ordering));
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return towers;
}

TowerCensus enumerate_distinct_towers(const GaloisModel& model, const Budgets& budgets,
                                      bool list_towers) {
  ChainSearch search(model, budgets);
  TowerCensus census;
  census.count = search.summarize(detail::all_indices(model.group())).chains;
  if (list_towers) census.towers = search.list(false);
  return census;
}

LeastLengthTowers min_length_towers(const GaloisModel& model, const Budgets& budgets,
                                    bool list_towers) {
  ChainSearch search(model, budgets);
  const auto summary = search.summarize(detail::all_indices(model.group()));
  LeastLengthTowers out;
  out.least_length = summary.depth + 1;
  out.count = summary.shortest;
  if (list_towers) out.towers = search.list(true);
  return out;
}

std::size_t root_capacity(const GaloisModel& model, const Subgroup& h) {
  if (!h.is_subgroup_of(model.group())) {
    throw DomainError("root_capacity: subgroup is not contained in the model's group");
  }
  return fixed_points(h).size();
}

std::vector<IntermediateFieldCheck> check_intermediate_fields(std::span<const std::uint64_t> primes,
                                                              const Budgets& budgets) {
  if (primes.size() < 2) throw DomainError("check_intermediate_fields: need at least two primes");
  std::set<std::uint64_t> distinct;
  std::uint64_t n = 1;
  for (auto p : primes) {
    if (p == 2 || !nt::is_prime(p) || !distinct.insert(p).second) {
      throw DomainError("check_intermediate_fields: primes must be distinct and odd");
    }
    n = nt::checked_mul(n, p);
  }
  const GaloisModel model = affine_model(n, budgets);

  std::vector<IntermediateFieldCheck> out;
  RootSet roots;
  std::uint64_t m = primes[0];
  roots.push_back(static_cast<Label>(n / primes[0]));
  for (std::size_t i = 2; i <= primes.size(); ++i) {
    m *= primes[i - 1];
    roots.push_back(static_cast<Label>(n / primes[i - 1]));

    IntermediateFieldCheck check;
    check.i = i;
    check.roots = make_root_set(roots);
    const Subgroup observed = pointwise_stabilizer(model.group(), check.roots);
    std::vector<Perm> described;
    for (std::uint64_t u = 1; u < n; u += m) {
      // u = 1 mod m; keep units only
      if (std::gcd(u, n) == 1) {
        described.push_back(model.affine_perm({0, static_cast<std::uint32_t>(u)}));
      }
    }
    const Subgroup expected = detail::SubgroupAccess::unchecked(n, std::move(described));
    check.stabilizer_order = observed.order();
    check.expected_order = expected.order();
    check.matches = observed == expected;
    out.push_back(std::move(check));
  }
  return out;
}

bool intermediate_fields_hold(std::span<const std::uint64_t> primes, const Budgets& budgets) {
  const auto checks = check_intermediate_fields(primes, budgets);
  return std::all_of(checks.begin(), checks.end(),
                     [](const IntermediateFieldCheck& c) { return c.matches; });
}

}  // namespace rootcluster
