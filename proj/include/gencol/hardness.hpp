#pragma once

#include <vector>

#include "gencol/exact.hpp"
#include "gencol/graph.hpp"
#include "gencol/order.hpp"

namespace gencol {

struct ReducedInstance {
  Graph graph;     // complement of the bipartite input
  int threshold;   // n - k
};

// Balanced-complete-bipartite-subgraph to weak-3-colouring reduction:
// bg has a K_{k,k} across its partition iff the complement's weak
// 3-colouring number is at most n - k.
ReducedInstance bcbs_to_wcol(const BipartiteGraph& bg, int k);

struct ReductionReport {
  bool biclique = false;
  int wcol3 = 0;
  int wcol4 = 0;
  int threshold = 0;
  bool equivalence_holds = false;  // biclique <=> wcol3 <= threshold
  bool radius_stable = false;      // wcol4 == wcol3
};

// Runs both sides of the reduction exactly and checks them against each
// other; exact-solver budgets propagate.
ReductionReport verify_reduction(const BipartiteGraph& bg, int k, ExactBudget budget = {});

// The certifying order for a known biclique (W1, W2): all other vertices
// first, then W1, then W2, ties by id. Guarantees an eval_wcol of at most
// n - |W1| on the complement at radius 3.
LinearOrder witness_order(const BipartiteGraph& bg, const std::vector<Vertex>& w1,
                          const std::vector<Vertex>& w2);

}  // namespace gencol
