#include "gencol/tgrad.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace gencol {

namespace {

// Packing state for one branch-vertex set: maximise the number of
// non-adjacent branch pairs joined by internally disjoint paths of length
// 2..max_len through free outside vertices.
struct PairPacking {
  const Graph& g;
  const std::vector<std::uint32_t>& adj;
  std::uint32_t branch;
  int max_len;
  std::uint64_t* nodes;
  std::uint64_t limit;
  Rational* global_best;  // density pruning reference
  int branch_size;
  int base_edges;

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::uint32_t used = 0;  // committed internal vertices
  int best = 0;

  void run() {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (!(branch & (1u << u))) continue;
      for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
        if (!(branch & (1u << v))) continue;
        if (!(adj[u] & (1u << v))) pairs.push_back({u, v});
      }
    }
    dfs(0, 0);
  }

  void dfs(size_t idx, int packed) {
    best = std::max(best, packed);
    if (idx >= pairs.size()) return;
    if (++*nodes > limit)
      throw TgradBudgetError("topological grad search budget exhausted", *global_best);
    int free_inner = g.vertex_count() - std::popcount(branch | used);
    int optimistic = packed + std::min(static_cast<int>(pairs.size() - idx), free_inner);
    // this branch set can no longer beat the best density seen
    if (Rational(base_edges + optimistic, branch_size) <= *global_best) return;

    dfs(idx + 1, packed);  // leave this pair unconnected

    auto [u, v] = pairs[idx];
    std::uint32_t starts = adj[u] & ~branch & ~used;
    while (starts) {
      Vertex w = std::countr_zero(starts);
      starts &= starts - 1;
      used |= 1u << w;
      grow(v, w, 1, idx, packed);
      used &= ~(1u << w);
    }
  }

  // cur is the m-th committed internal vertex of a path growing from u
  // towards v; closing now gives a path of length m+1.
  void grow(Vertex v, Vertex cur, int m, size_t idx, int packed) {
    if (adj[cur] & (1u << v)) dfs(idx + 1, packed + 1);
    if (m + 2 > max_len) return;
    std::uint32_t candidates = adj[cur] & ~branch & ~used;
    while (candidates) {
      Vertex w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      used |= 1u << w;
      grow(v, w, m + 1, idx, packed);
      used &= ~(1u << w);
    }
  }
};

}  // namespace

Rational top_grad_bruteforce(const Graph& g, int r, ExactBudget budget) {
  if (r < 0) throw InputError("negative grad rank");
  int n = g.vertex_count();
  if (n == 0) throw InputError("grad of the empty graph");
  std::uint64_t limit = budget.node_limit;
  if (limit == 0) {
    if (n > kTgradSizeCap)
      throw InputError("top_grad_bruteforce: graph exceeds the size cap of " +
                       std::to_string(kTgradSizeCap) + " vertices; raise the node budget");
    limit = kDefaultNodeLimit;
  }
  if (n > 31) throw InputError("top_grad_bruteforce supports at most 31 vertices");

  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }

  Rational best(0);
  std::uint64_t nodes = 0;
  int max_len = 2 * r + 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    int base = 0;
    for (Vertex u = 0; u < n; ++u)
      if (mask & (1u << u)) base += std::popcount(adj[u] & mask);
    base /= 2;
    int pair_budget = size * (size - 1) / 2 - base;
    int free_inner = n - size;
    int optimistic = base + (r >= 1 ? std::min(pair_budget, free_inner) : 0);
    if (r == 0 || pair_budget == 0 || free_inner == 0 ||
        Rational(optimistic, size) <= best) {
      // no packing possible or even packing everything cannot win
      Rational density(base, size);
      if (density > best) best = density;
      continue;
    }
    PairPacking packing{g, adj, mask, max_len, &nodes, limit, &best, size, base};
    packing.run();
    Rational density(base + packing.best, size);
    if (density > best) best = density;
  }
  return best;
}

AdmBoundReport check_adm_bound(const Graph& g, int r, ExactBudget budget) {
  if (r < 1) throw InputError("check_adm_bound requires r >= 1");
  AdmBoundReport report;
  report.adm = adm_exact(g, r, budget).value;
  report.grad = top_grad_bruteforce(g, r - 1, budget);
  Rational clamped = report.grad < Rational(1) ? Rational(1) : report.grad;
  report.bound = Rational(6LL * r) * clamped.pow(3);
  report.literal_bound = Rational(6LL * r) * report.grad.pow(3);
  report.slack = report.bound - Rational(report.adm);
  report.holds = Rational(report.adm) <= report.bound;
  report.literal_holds = Rational(report.adm) <= report.literal_bound;
  return report;
}

}  // namespace gencol
