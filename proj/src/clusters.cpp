#include "rootcluster/clusters.hpp"

#include <algorithm>
#include <map>

#include "rootcluster/errors.hpp"

namespace rootcluster {

RootSet cluster_of(const GaloisModel& model, Label i) {
  if (i >= model.n()) {
    throw DomainError("cluster_of: root label " + std::to_string(i) + " out of range for n=" +
                      std::to_string(model.n()));
  }
  return fixed_points(stabilizer(model.group(), i));
}

ClusterPartition cluster_partition(const GaloisModel& model) {
  const std::size_t n = model.n();
  ClusterPartition out;
  out.cluster_index.assign(n, 0);

  // Group roots by their cluster; i ~ j iff cluster_of(i) == cluster_of(j).
  std::map<RootSet, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) {
    const auto label = static_cast<Label>(i);
    RootSet c = cluster_of(model, label);
    auto [it, inserted] = position.try_emplace(c, out.clusters.size());
    if (inserted) out.clusters.push_back(std::move(c));
    out.cluster_index[i] = it->second;
  }

  // Each root must belong to exactly the cluster it generates.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = out.clusters[out.cluster_index[i]];
    if (!std::binary_search(c.begin(), c.end(), static_cast<Label>(i))) {
      throw InvariantError("root " + std::to_string(i) + " is not in its own cluster");
    }
  }
  std::size_t covered = 0;
  for (const auto& c : out.clusters) covered += c.size();
  if (covered != n) throw InvariantError("clusters do not partition the roots");

  out.r = out.clusters.front().size();
  out.s = out.clusters.size();
  for (const auto& c : out.clusters) {
    if (c.size() != out.r) throw InvariantError("clusters have unequal sizes");
  }
  if (out.r * out.s != n) throw InvariantError("r * s != n");
  return out;
}

std::vector<Label> representatives(const ClusterPartition& partition) {
  std::vector<Label> reps;
  reps.reserve(partition.clusters.size());
  for (const auto& c : partition.clusters) reps.push_back(c.front());
  return reps;
}

}  // namespace rootcluster
