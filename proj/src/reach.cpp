#include "gencol/reach.hpp"

#include <algorithm>
#include <deque>

#include "gencol/errors.hpp"
#include "gencol/paths.hpp"

namespace gencol {

namespace {

void check_args(const Graph& g, const LinearOrder& order, int r) {
  if (order.size() != g.vertex_count()) throw InputError("order size does not match graph");
  if (r < 0) throw InputError("negative radius");
}

// BFS from u restricted to vertices of rank >= rank(u), depth capped at r.
// u is weakly reachable from exactly the vertices this BFS visits: a
// witnessing path has u as its minimum, so it stays inside that subgraph,
// and reachability inside it is all that is required.
void min_vertex_bfs(const Graph& g, const LinearOrder& order, Vertex u, int r,
                    std::vector<int>& dist) {
  dist.assign(g.vertex_count(), -1);
  int ru = order.rank(u);
  dist[u] = 0;
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] >= r) continue;
    for (Vertex w : g.neighbors(x)) {
      if (dist[w] == -1 && order.rank(w) >= ru) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
    }
  }
}

// Distances of the region reachable from v through vertices above v only
// (the sources of strong reachability). dist[v] = 0.
void above_region_bfs(const Graph& g, const LinearOrder& order, Vertex v, int cap,
                      std::vector<int>& dist) {
  dist.assign(g.vertex_count(), -1);
  int rv = order.rank(v);
  dist[v] = 0;
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] >= cap) continue;
    for (Vertex w : g.neighbors(x)) {
      if (dist[w] == -1 && order.rank(w) > rv) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<Vertex> wreach(const Graph& g, const LinearOrder& order, Vertex v, int r) {
  check_args(g, order, r);
  g.check_vertex(v);
  std::vector<Vertex> out;
  std::vector<int> dist;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (order.rank(u) > order.rank(v)) continue;
    min_vertex_bfs(g, order, u, r, dist);
    if (dist[v] != -1) out.push_back(u);
  }
  return out;
}

std::vector<Vertex> sreach(const Graph& g, const LinearOrder& order, Vertex v, int r) {
  check_args(g, order, r);
  g.check_vertex(v);
  std::vector<Vertex> out{v};
  if (r == 0) return out;
  std::vector<int> dist;
  above_region_bfs(g, order, v, r - 1, dist);
  int rv = order.rank(v);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (order.rank(u) >= rv) continue;
    for (Vertex y : g.neighbors(u)) {
      if (dist[y] != -1 && dist[y] <= r - 1) {
        out.push_back(u);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int adm_at(const Graph& g, const LinearOrder& order, Vertex v, int r) {
  check_args(g, order, r);
  g.check_vertex(v);
  if (r == 0) return 1;
  int n = g.vertex_count();
  std::vector<bool> inner(n, false), targets(n, false);
  int rv = order.rank(v);
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    if (order.rank(u) > rv)
      inner[u] = true;
    else
      targets[u] = true;
  }
  return 1 + max_disjoint_paths(g, v, inner, targets, r);
}

int eval_wcol(const Graph& g, const LinearOrder& order, int r) {
  check_args(g, order, r);
  int n = g.vertex_count();
  std::vector<int> count(n, 0);
  std::vector<int> dist;
  for (Vertex u = 0; u < n; ++u) {
    min_vertex_bfs(g, order, u, r, dist);
    for (Vertex v = 0; v < n; ++v)
      if (dist[v] != -1) ++count[v];
  }
  int best = 0;
  for (Vertex v = 0; v < n; ++v) best = std::max(best, count[v]);
  return best;
}

int eval_col(const Graph& g, const LinearOrder& order, int r) {
  check_args(g, order, r);
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, static_cast<int>(sreach(g, order, v, r).size()));
  return best;
}

int eval_adm(const Graph& g, const LinearOrder& order, int r) {
  check_args(g, order, r);
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, adm_at(g, order, v, r));
  return best;
}

long long ReachProfile::wreach_total(Vertex v) const {
  long long t = 0;
  for (int c : wreach_layers.at(v)) t += c;
  return t;
}

long long ReachProfile::sreach_total(Vertex v) const {
  long long t = 0;
  for (int c : sreach_layers.at(v)) t += c;
  return t;
}

Rational ReachProfile::W() const {
  Rational total(0);
  for (int i = 1; i <= r; ++i) total = total + w(i);
  return total;
}

Rational ReachProfile::C() const {
  Rational total(0);
  for (int i = 1; i <= r; ++i) total = total + c(i);
  return total;
}

ReachProfile profile(const Graph& g, const LinearOrder& order, int r) {
  check_args(g, order, r);
  int n = g.vertex_count();
  ReachProfile p;
  p.n = n;
  p.r = r;
  p.wreach_layers.assign(n, std::vector<int>(r + 1, 0));
  p.sreach_layers.assign(n, std::vector<int>(r + 1, 0));
  p.S.assign(r + 1, 0);
  p.U.assign(r + 1, 0);

  std::vector<int> dist;
  for (Vertex u = 0; u < n; ++u) {
    // The minimal radius at which u enters WReach[v] is the restricted
    // distance, because every witnessing path lives above u.
    min_vertex_bfs(g, order, u, r, dist);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == -1) continue;
      p.wreach_layers[v][dist[v]] += 1;
      p.S[dist[v]] += 1;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    p.sreach_layers[v][0] += 1;
    p.U[0] += 1;
    if (r == 0) continue;
    above_region_bfs(g, order, v, r - 1, dist);
    int rv = order.rank(v);
    for (Vertex u = 0; u < n; ++u) {
      if (order.rank(u) >= rv) continue;
      int best = -1;
      for (Vertex y : g.neighbors(u)) {
        if (dist[y] != -1 && dist[y] <= r - 1) {
          int len = dist[y] + 1;
          if (best == -1 || len < best) best = len;
        }
      }
      if (best != -1) {
        p.sreach_layers[v][best] += 1;
        p.U[best] += 1;
      }
    }
  }
  return p;
}

}  // namespace gencol
