#pragma once

#include <vector>

#include "rootcluster/models.hpp"

namespace rootcluster {

// Partition of the roots into clusters: the roots lying in K(alpha) for a single
// root alpha. All clusters have the same size r and there are s of them, r*s = n.
struct ClusterPartition {
  std::vector<RootSet> clusters;  // ordered by smallest member
  std::size_t r = 0;              // cluster size
  std::size_t s = 0;              // cluster count
  std::vector<std::size_t> cluster_index;  // root label -> position in `clusters`

  bool same_cluster(Label a, Label b) const { return cluster_index[a] == cluster_index[b]; }
};

/// Fixed points of the stabilizer of root i; always contains i.
RootSet cluster_of(const GaloisModel& model, Label i);

/// Throws InvariantError if the clusters are not equal-sized blocks of a partition.
ClusterPartition cluster_partition(const GaloisModel& model);

/// Smallest label of each cluster, ascending.
std::vector<Label> representatives(const ClusterPartition& partition);

}  // namespace rootcluster
