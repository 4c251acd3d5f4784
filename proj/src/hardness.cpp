#include "gencol/hardness.hpp"

#include <algorithm>

#include "gencol/errors.hpp"

namespace gencol {

ReducedInstance bcbs_to_wcol(const BipartiteGraph& bg, int k) {
  int a = static_cast<int>(bg.side_vertices(1).size());
  int b = static_cast<int>(bg.side_vertices(2).size());
  if (k < 1 || k > std::min(a, b))
    throw InputError("biclique size k out of range for this bipartition");
  return {complement(bg.graph), bg.graph.vertex_count() - k};
}

ReductionReport verify_reduction(const BipartiteGraph& bg, int k, ExactBudget budget) {
  auto reduced = bcbs_to_wcol(bg, k);
  ReductionReport report;
  report.threshold = reduced.threshold;
  report.biclique = biclique_bruteforce(bg, k);
  report.wcol3 = wcol_exact(reduced.graph, 3, budget).value;
  report.wcol4 = wcol_exact(reduced.graph, 4, budget).value;
  report.equivalence_holds = report.biclique == (report.wcol3 <= report.threshold);
  report.radius_stable = report.wcol3 == report.wcol4;
  return report;
}

LinearOrder witness_order(const BipartiteGraph& bg, const std::vector<Vertex>& w1,
                          const std::vector<Vertex>& w2) {
  if (w1.empty() || w1.size() != w2.size())
    throw InputError("witness sets must be non-empty and balanced");
  int n = bg.graph.vertex_count();
  std::vector<int> role(n, 0);
  for (Vertex v : w1) {
    bg.graph.check_vertex(v);
    if (bg.side[v] != bg.side[w1.front()] || role[v] != 0)
      throw InputError("W1 must be distinct vertices of one side");
    role[v] = 1;
  }
  for (Vertex v : w2) {
    bg.graph.check_vertex(v);
    if (bg.side[v] == bg.side[w1.front()] || role[v] != 0)
      throw InputError("W2 must be distinct vertices of the other side");
    role[v] = 2;
  }
  for (Vertex u : w1)
    for (Vertex v : w2)
      if (!bg.graph.has_edge(u, v))
        throw InputError("W1 x W2 is not a biclique: missing edge " + std::to_string(u) + "-" +
                         std::to_string(v));

  std::vector<Vertex> seq;
  for (int want : {0, 1, 2})
    for (Vertex v = 0; v < n; ++v)
      if (role[v] == want) seq.push_back(v);
  return LinearOrder::from_sequence(seq);
}

}  // namespace gencol
