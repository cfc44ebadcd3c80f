#pragma once

// Subgroups of a fixed group G held as ascending positions into G's element list.
// Used by the search routines, which filter the same group many times.

#include <cstdint>
#include <numeric>
#include <vector>

#include "rootcluster/permgroup.hpp"

namespace rootcluster::detail {

using ElementIndices = std::vector<std::uint32_t>;

inline ElementIndices all_indices(const Subgroup& g) {
  ElementIndices out(g.order());
  std::iota(out.begin(), out.end(), 0U);
  return out;
}

inline ElementIndices fixing(const Subgroup& g, const ElementIndices& h, Label x) {
  ElementIndices out;
  for (auto i : h) {
    if (g[i].fixes(x)) out.push_back(i);
  }
  return out;
}

inline Subgroup materialize(const Subgroup& g, const ElementIndices& h) {
  std::vector<Perm> elements;
  elements.reserve(h.size());
  for (auto i : h) elements.push_back(g[i]);
  return SubgroupAccess::unchecked(g.degree(), std::move(elements));
}

}  // namespace rootcluster::detail
