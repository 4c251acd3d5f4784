#pragma once

#include <vector>

#include "gencol/graph.hpp"
#include "gencol/order.hpp"

namespace gencol {

// b_r(S, v): maximum number of paths of length <= r from v into S whose
// internal vertices avoid S, pairwise meeting in v only. Counts the trivial
// length-0 path, so the value is >= 1. Requires v in S.
int b_r(const Graph& g, const std::vector<Vertex>& s_set, Vertex v, int r);

struct GreedyAdmResult {
  LinearOrder order;
  // max of the b_r values chosen along the construction; equals
  // eval_adm(g, order, r).
  int certificate = 0;
};

// Greedy admissibility order: placing ranks n down to 1, always pick the
// unplaced vertex whose b_r against the unplaced set is minimal (ties by
// vertex id).
GreedyAdmResult greedy_adm_order(const Graph& g, int r);

// Min-degree peeling order; the first vertex removed gets the largest rank,
// so every vertex keeps at most degeneracy(g) smaller neighbours.
LinearOrder degeneracy_order(const Graph& g);

}  // namespace gencol
