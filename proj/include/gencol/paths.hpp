#pragma once

#include <cstdint>
#include <vector>

#include "gencol/graph.hpp"

namespace gencol {

// Maximum number of paths of length <= max_len that start in `source`, end
// in a vertex of `targets`, route their internal vertices through `inner`,
// and pairwise intersect in `source` only. The trivial length-0 path is NOT
// counted here; admissibility-style callers add 1 for it.
//
// Bounded-length disjoint-path packing has no known polynomial exact
// algorithm, so the value is sandwiched: a greedy shortest-path packing
// gives a lower bound, vertex-disjoint max-flow with unbounded path length
// an upper bound, and an exhaustive packing search settles disagreements.
// `inner` and `targets` must be disjoint and exclude `source`.
int max_disjoint_paths(const Graph& g, Vertex source, const std::vector<bool>& inner,
                       const std::vector<bool>& targets, int max_len);

}  // namespace gencol
