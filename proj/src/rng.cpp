#include "gencol/rng.hpp"

#include "gencol/errors.hpp"

namespace gencol {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  while (true) {
    std::uint64_t draw = engine_();
    if (draw >= threshold) return draw % bound;
  }
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) throw InputError("empty range");
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

LinearOrder Rng::random_order(int n) {
  std::vector<Vertex> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(below(static_cast<std::uint64_t>(i) + 1));
    std::swap(seq[i], seq[j]);
  }
  return LinearOrder::from_sequence(seq);
}

Graph Rng::random_graph(int n, std::uint64_t edge_num, std::uint64_t edge_den) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (chance(edge_num, edge_den)) edges.push_back({u, v});
  return Graph(n, edges);
}

BipartiteGraph Rng::random_bipartite(int a, int b, std::uint64_t edge_num,
                                     std::uint64_t edge_den) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v)
      if (chance(edge_num, edge_den)) edges.push_back({u, a + v});
  std::vector<int> side(a + b, 1);
  for (Vertex v = a; v < a + b; ++v) side[v] = 2;
  return BipartiteGraph(Graph(a + b, edges), side);
}

}  // namespace gencol
