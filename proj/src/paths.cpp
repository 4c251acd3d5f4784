#include "gencol/paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "gencol/errors.hpp"

namespace gencol {

namespace {

// Greedy packing: repeatedly commit a shortest eligible path and delete its
// non-source vertices. Lower bound only.
int greedy_packing(const Graph& g, Vertex source, std::vector<bool> inner,
                   std::vector<bool> targets, int max_len) {
  int count = 0;
  int n = g.vertex_count();
  std::vector<int> dist(n), from(n);
  while (true) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    Vertex hit = -1;
    while (!queue.empty() && hit == -1) {
      Vertex u = queue.front();
      queue.pop_front();
      if (dist[u] >= max_len) continue;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] != -1) continue;
        if (targets[w]) {
          dist[w] = dist[u] + 1;
          from[w] = u;
          hit = w;
          break;
        }
        if (inner[w]) {
          dist[w] = dist[u] + 1;
          from[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (hit == -1) break;
    ++count;
    for (Vertex x = hit; x != source; x = from[x]) {
      inner[x] = false;
      targets[x] = false;
    }
  }
  return count;
}

// Vertex-disjoint max flow, path length unbounded. Unit node capacities on
// inner vertices (split into in/out), each target feeds the sink once.
struct FlowNet {
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;
  int node_count = 0;

  int add_node() {
    out.emplace_back();
    return node_count++;
  }
  void add_arc(int a, int b, int cap) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cap});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (true) {
      // BFS level graph + single augment per round is plenty at desk scale.
      std::vector<int> prev_arc(node_count, -1);
      std::deque<int> queue{s};
      std::vector<bool> seen(node_count, false);
      seen[s] = true;
      while (!queue.empty() && !seen[t]) {
        int u = queue.front();
        queue.pop_front();
        for (int id : out[u]) {
          if (arcs[id].cap <= 0 || seen[arcs[id].to]) continue;
          seen[arcs[id].to] = true;
          prev_arc[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
          if (arcs[id].to == t) break;
        }
      }
      if (!seen[t]) break;
      for (int x = t; x != s;) {
        int id = prev_arc[x];
        arcs[id].cap -= 1;
        arcs[id ^ 1].cap += 1;
        x = arcs[id ^ 1].to;
      }
      ++total;
    }
    return total;
  }
};

int flow_upper_bound(const Graph& g, Vertex source, const std::vector<bool>& inner,
                     const std::vector<bool>& targets) {
  int n = g.vertex_count();
  FlowNet net;
  std::vector<int> node_in(n, -1), node_out(n, -1);
  int s = net.add_node();
  int t = net.add_node();
  for (Vertex v = 0; v < n; ++v) {
    if (inner[v]) {
      node_in[v] = net.add_node();
      node_out[v] = net.add_node();
      net.add_arc(node_in[v], node_out[v], 1);
    } else if (targets[v]) {
      node_in[v] = net.add_node();
      net.add_arc(node_in[v], t, 1);
    }
  }
  auto arc_into = [&](int from_node, Vertex w) {
    if (node_in[w] != -1) net.add_arc(from_node, node_in[w], 1);
  };
  for (Vertex w : g.neighbors(source)) arc_into(s, w);
  for (Vertex v = 0; v < n; ++v) {
    if (!inner[v]) continue;
    for (Vertex w : g.neighbors(v))
      if (w != source) arc_into(node_out[v], w);
  }
  return net.max_flow(s, t);
}

// Exhaustive packing. Paths are grouped by their first hop from the source;
// distinct paths need distinct first hops, so we branch over the source's
// neighbour list in id order: either no committed path starts at nb[i], or
// we commit one of the eligible simple paths starting there.
struct ExhaustiveSearch {
  const Graph& g;
  Vertex source;
  std::vector<bool> inner;
  std::vector<bool> targets;
  int max_len;
  std::vector<Vertex> first_hops;
  int best = 0;

  ExhaustiveSearch(const Graph& g_, Vertex src, std::vector<bool> in, std::vector<bool> tg,
                   int len)
      : g(g_), source(src), inner(std::move(in)), targets(std::move(tg)), max_len(len) {
    for (Vertex w : g.neighbors(source))
      if (inner[w] || targets[w]) first_hops.push_back(w);
  }

  void run() { branch(0, 0); }

  void branch(size_t hop_idx, int committed) {
    best = std::max(best, committed);
    if (hop_idx >= first_hops.size()) return;
    int remaining = 0;
    for (size_t i = hop_idx; i < first_hops.size(); ++i)
      if (inner[first_hops[i]] || targets[first_hops[i]]) ++remaining;
    if (committed + remaining <= best) return;

    // Option: no path through this first hop.
    branch(hop_idx + 1, committed);

    Vertex h = first_hops[hop_idx];
    if (targets[h]) {
      targets[h] = false;
      branch(hop_idx + 1, committed + 1);
      targets[h] = true;
    }
    if (inner[h] && max_len >= 2) {
      inner[h] = false;
      extend(h, 1, hop_idx, committed);
      inner[h] = true;
    }
  }

  // Grow a simple path whose current end is `u` at distance `len` from the
  // source; when a free target is adjacent, commit and recurse.
  void extend(Vertex u, int len, size_t hop_idx, int committed) {
    if (len >= max_len) return;
    for (Vertex w : g.neighbors(u)) {
      if (targets[w]) {
        targets[w] = false;
        branch(hop_idx + 1, committed + 1);
        targets[w] = true;
      }
    }
    if (len + 1 >= max_len) return;
    for (Vertex w : g.neighbors(u)) {
      if (!inner[w]) continue;
      inner[w] = false;
      extend(w, len + 1, hop_idx, committed);
      inner[w] = true;
    }
  }
};

}  // namespace

int max_disjoint_paths(const Graph& g, Vertex source, const std::vector<bool>& inner,
                       const std::vector<bool>& targets, int max_len) {
  g.check_vertex(source);
  if (max_len < 0) throw InputError("negative path length bound");
  if (inner[source] || targets[source])
    throw InputError("source may be neither internal nor a target");
  if (max_len == 0) return 0;

  int upper = flow_upper_bound(g, source, inner, targets);
  if (upper == 0) return 0;
  // Simple paths never exceed n-1 edges, so the flow value is exact then.
  if (max_len >= g.vertex_count() - 1) return upper;

  int lower = greedy_packing(g, source, inner, targets, max_len);
  if (lower == upper) return lower;

  ExhaustiveSearch search(g, source, inner, targets, max_len);
  search.best = lower;
  search.run();
  return search.best;
}

}  // namespace gencol
