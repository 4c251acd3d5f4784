#include "gencol/heuristics.hpp"

#include <algorithm>

#include "gencol/errors.hpp"
#include "gencol/paths.hpp"

namespace gencol {

namespace {

int b_r_masked(const Graph& g, const std::vector<bool>& in_set, Vertex v, int r) {
  int n = g.vertex_count();
  std::vector<bool> inner(n, false), targets(n, false);
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    if (in_set[u])
      targets[u] = true;
    else
      inner[u] = true;
  }
  return 1 + max_disjoint_paths(g, v, inner, targets, r);
}

}  // namespace

int b_r(const Graph& g, const std::vector<Vertex>& s_set, Vertex v, int r) {
  g.check_vertex(v);
  if (r < 0) throw InputError("negative radius");
  std::vector<bool> in_set(g.vertex_count(), false);
  for (Vertex u : s_set) {
    g.check_vertex(u);
    in_set[u] = true;
  }
  if (!in_set[v]) throw InputError("b_r requires v to be a member of S");
  return b_r_masked(g, in_set, v, r);
}

GreedyAdmResult greedy_adm_order(const Graph& g, int r) {
  if (r < 1) throw InputError("greedy_adm_order requires r >= 1");
  int n = g.vertex_count();
  std::vector<bool> unplaced(n, true);
  std::vector<Vertex> seq(n, -1);
  GreedyAdmResult out;
  for (int rank = n; rank >= 1; --rank) {
    Vertex pick = -1;
    int pick_value = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!unplaced[v]) continue;
      int value = b_r_masked(g, unplaced, v, r);
      if (pick == -1 || value < pick_value) {
        pick = v;
        pick_value = value;
      }
    }
    seq[rank - 1] = pick;
    unplaced[pick] = false;
    out.certificate = std::max(out.certificate, pick_value);
  }
  out.order = LinearOrder::from_sequence(seq);
  return out;
}

LinearOrder degeneracy_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<bool> gone(n, false);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removal;
  removal.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    gone[pick] = true;
    removal.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!gone[w]) --deg[w];
  }
  std::reverse(removal.begin(), removal.end());
  return LinearOrder::from_sequence(removal);
}

}  // namespace gencol
