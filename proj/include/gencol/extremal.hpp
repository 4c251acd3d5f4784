#pragma once

#include <cstdint>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/treedec.hpp"

namespace gencol {

// The lower-bound family G(k,r): a width-k graph whose weak r-colouring
// number meets the binomial upper bound exactly. Nodes of the construction
// tree are numbered in BFS order and the node-to-vertex bijection is the
// identity on those indices.
struct ExtremalInstance {
  Graph graph;
  TreeDecomposition td;
  int k = 0;
  int r = 0;
  long long c = 0;  // branching degree C(r+k, k), fixed at the top level
};

// Exact vertex count of gen_gkr(k, r), from the recursion alone.
long long size_estimate(int k, int r);

inline constexpr long long kDefaultGkrVertexCap = 200'000;

// Builds G(k,r) with its tree decomposition. Throws ResourceError when the
// size estimate exceeds the cap.
ExtremalInstance gen_gkr(int k, int r, long long vertex_cap = kDefaultGkrVertexCap);

}  // namespace gencol
