#pragma once

// Brute-force reference implementations, deliberately independent of the
// library's algorithms: reach sets by enumerating every simple path,
// admissibility by packing over the full path list, optimal colouring
// numbers by trying all n! orders. Usable only at toy sizes.

#include <algorithm>
#include <set>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/order.hpp"
#include "gencol/rational.hpp"

namespace gencol::oracle {

using Path = std::vector<Vertex>;

inline void all_paths_from(const Graph& g, Path& current, std::vector<bool>& on_path,
                           int max_len, std::vector<Path>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) - 1 >= max_len) return;
  for (Vertex w : g.neighbors(current.back())) {
    if (on_path[w]) continue;
    on_path[w] = true;
    current.push_back(w);
    all_paths_from(g, current, on_path, max_len, out);
    current.pop_back();
    on_path[w] = false;
  }
}

// every simple path starting at v with at most max_len edges
inline std::vector<Path> all_simple_paths(const Graph& g, Vertex v, int max_len) {
  std::vector<Path> out;
  Path current{v};
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[v] = true;
  all_paths_from(g, current, on_path, max_len, out);
  return out;
}

inline std::vector<Vertex> wreach_oracle(const Graph& g, const LinearOrder& order, Vertex v,
                                         int r) {
  std::set<Vertex> result;
  for (const Path& p : all_simple_paths(g, v, r)) {
    Vertex last = p.back();
    bool is_min = true;
    for (Vertex w : p)
      if (order.rank(w) < order.rank(last)) is_min = false;
    if (is_min) result.insert(last);
  }
  return {result.begin(), result.end()};
}

inline std::vector<Vertex> sreach_oracle(const Graph& g, const LinearOrder& order, Vertex v,
                                         int r) {
  std::set<Vertex> result{v};
  for (const Path& p : all_simple_paths(g, v, r)) {
    Vertex last = p.back();
    if (order.rank(last) > order.rank(v)) continue;
    bool internals_above = true;
    for (size_t i = 1; i + 1 < p.size(); ++i)
      if (order.rank(p[i]) <= order.rank(v)) internals_above = false;
    if (internals_above) result.insert(last);
  }
  return {result.begin(), result.end()};
}

// max packing over an explicit path list, vertex-disjoint outside v
inline int pack_paths(const std::vector<Path>& paths, size_t idx, std::vector<bool>& used) {
  if (idx == paths.size()) return 0;
  int best = pack_paths(paths, idx + 1, used);
  const Path& p = paths[idx];
  bool free_path = true;
  for (size_t i = 1; i < p.size(); ++i)
    if (used[p[i]]) free_path = false;
  if (free_path) {
    for (size_t i = 1; i < p.size(); ++i) used[p[i]] = true;
    best = std::max(best, 1 + pack_paths(paths, idx + 1, used));
    for (size_t i = 1; i < p.size(); ++i) used[p[i]] = false;
  }
  return best;
}

inline int adm_oracle(const Graph& g, const LinearOrder& order, Vertex v, int r) {
  std::vector<Path> eligible;
  for (const Path& p : all_simple_paths(g, v, r)) {
    if (p.size() < 2) continue;
    if (order.rank(p.back()) > order.rank(v)) continue;
    bool internals_above = true;
    for (size_t i = 1; i + 1 < p.size(); ++i)
      if (order.rank(p[i]) <= order.rank(v)) internals_above = false;
    if (internals_above) eligible.push_back(p);
  }
  std::vector<bool> used(g.vertex_count(), false);
  return 1 + pack_paths(eligible, 0, used);
}

// b_r oracle: paths from v ending in S, internals outside S
inline int b_r_oracle(const Graph& g, const std::vector<Vertex>& s_set, Vertex v, int r) {
  std::vector<bool> in_s(g.vertex_count(), false);
  for (Vertex u : s_set) in_s[u] = true;
  std::vector<Path> eligible;
  for (const Path& p : all_simple_paths(g, v, r)) {
    if (p.size() < 2) continue;
    if (!in_s[p.back()]) continue;
    bool internals_outside = true;
    for (size_t i = 1; i + 1 < p.size(); ++i)
      if (in_s[p[i]]) internals_outside = false;
    if (internals_outside) eligible.push_back(p);
  }
  std::vector<bool> used(g.vertex_count(), false);
  return 1 + pack_paths(eligible, 0, used);
}

template <typename Eval>
int min_over_all_orders(const Graph& g, Eval eval) {
  int n = g.vertex_count();
  std::vector<Vertex> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  int best = -1;
  do {
    int value = eval(LinearOrder::from_sequence(seq));
    if (best == -1 || value < best) best = value;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

inline Rational densest_subgraph_oracle(const Graph& g) {
  int n = g.vertex_count();
  Rational best(0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int edges = 0;
    for (auto [u, v] : g.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) ++edges;
    Rational density(edges, __builtin_popcount(mask));
    if (density > best) best = density;
  }
  return best;
}

inline int girth_oracle(const Graph& g) {
  // shortest cycle through each edge: remove it, measure the detour
  int best = -1;
  for (auto [u, v] : g.edges()) {
    std::vector<Edge> rest;
    for (auto e : g.edges())
      if (e != Edge{u, v}) rest.push_back(e);
    Graph h(g.vertex_count(), rest);
    auto dist = bfs_distances(h, u);
    if (dist[v] != -1 && (best == -1 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  return best == -1 ? kGirthInfinite : best;
}

}  // namespace gencol::oracle
