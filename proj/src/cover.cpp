#include "gencol/cover.hpp"

#include <algorithm>
#include <deque>

#include "gencol/errors.hpp"

namespace gencol {

namespace {

// distances inside the induced subgraph on `members`
std::vector<int> induced_distances(const Graph& g, const std::vector<Vertex>& members,
                                   Vertex source, const std::vector<char>& in_cluster) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (in_cluster[w] && dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  (void)members;
  return dist;
}

// true radius (min over members of their eccentricity) or -1 if disconnected
int induced_radius(const Graph& g, const std::vector<Vertex>& members) {
  std::vector<char> in_cluster(g.vertex_count(), 0);
  for (Vertex v : members) in_cluster[v] = 1;
  int best = -1;
  for (Vertex s : members) {
    auto dist = induced_distances(g, members, s, in_cluster);
    int ecc = 0;
    bool connected = true;
    for (Vertex v : members) {
      if (dist[v] == -1) {
        connected = false;
        break;
      }
      ecc = std::max(ecc, dist[v]);
    }
    if (!connected) return -1;
    if (best == -1 || ecc < best) best = ecc;
  }
  return best;
}

}  // namespace

Cover build_cover(const Graph& g, const LinearOrder& order, int r) {
  if (r < 1) throw InputError("cover radius parameter must be >= 1");
  if (order.size() != g.vertex_count()) throw InputError("order size does not match graph");
  int n = g.vertex_count();
  Cover cover;
  cover.r = r;
  for (Vertex w = 0; w < n; ++w) {
    // BFS ball of w of radius 2r above w in the order: exactly the vertices
    // that weakly 2r-reach w.
    std::vector<int> dist(n, -1);
    dist[w] = 0;
    std::deque<Vertex> queue{w};
    std::vector<Vertex> members{w};
    int rw = order.rank(w);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (dist[u] >= 2 * r) continue;
      for (Vertex x : g.neighbors(u)) {
        if (dist[x] == -1 && order.rank(x) >= rw) {
          dist[x] = dist[u] + 1;
          members.push_back(x);
          queue.push_back(x);
        }
      }
    }
    if (members.empty()) continue;
    std::sort(members.begin(), members.end());
    cover.clusters.push_back({w, std::move(members)});
  }
  return cover;
}

CoverReport validate_cover(const Graph& g, const Cover& cover, int r) {
  CoverReport report;
  int n = g.vertex_count();
  std::vector<int> degree(n, 0);
  report.clusters_connected = true;
  for (size_t i = 0; i < cover.clusters.size(); ++i) {
    const Cluster& cl = cover.clusters[i];
    if (cl.members.empty()) {
      report.violation = "cluster " + std::to_string(i) + " is empty";
      return report;
    }
    if (!std::is_sorted(cl.members.begin(), cl.members.end())) {
      report.violation = "cluster " + std::to_string(i) + " members are not sorted";
      return report;
    }
    for (Vertex v : cl.members) {
      g.check_vertex(v);
      ++degree[v];
    }
    if (cl.center != -1 &&
        !std::binary_search(cl.members.begin(), cl.members.end(), cl.center)) {
      report.violation = "cluster " + std::to_string(i) + " does not contain its center";
      return report;
    }
    int radius = induced_radius(g, cl.members);
    if (radius == -1) {
      report.clusters_connected = false;
      report.violation = "cluster " + std::to_string(i) + " induces a disconnected subgraph";
      return report;
    }
    report.max_radius = std::max(report.max_radius, radius);
  }
  for (Vertex v = 0; v < n; ++v) report.max_degree = std::max(report.max_degree, degree[v]);

  for (Vertex v = 0; v < n; ++v) {
    auto ball = bfs_ball(g, v, r);
    bool contained = false;
    for (const Cluster& cl : cover.clusters) {
      if (std::includes(cl.members.begin(), cl.members.end(), ball.begin(), ball.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) {
      report.violation = "no cluster contains the " + std::to_string(r) +
                         "-neighbourhood of vertex " + std::to_string(v);
      return report;
    }
  }
  report.is_cover = true;
  return report;
}

Cover project_cover(const Graph& g_sub, const Graph& h, int s, const Cover& cover) {
  // g_sub must be the canonical s-subdivision of h (ids preserved)
  Graph expected = subdivide(h, s);
  if (expected.vertex_count() != g_sub.vertex_count() || expected.edges() != g_sub.edges())
    throw InputError("project_cover: graph is not the exact s-subdivision of the host");

  int nh = h.vertex_count();
  Cover out;
  // every host edge is a path of length s+1, so host distances scale exactly
  out.r = std::max(1, cover.r / (s + 1));
  for (const Cluster& cl : cover.clusters) {
    Cluster proj;
    for (Vertex v : cl.members)
      if (v < nh) proj.members.push_back(v);
    if (proj.members.empty()) continue;
    // center: id-smallest eccentricity minimiser within the projection
    std::vector<char> in_cluster(nh, 0);
    for (Vertex v : proj.members) in_cluster[v] = 1;
    int best_ecc = -1;
    for (Vertex cand : proj.members) {
      auto dist = induced_distances(h, proj.members, cand, in_cluster);
      int ecc = 0;
      bool ok = true;
      for (Vertex v : proj.members) {
        if (dist[v] == -1) {
          ok = false;
          break;
        }
        ecc = std::max(ecc, dist[v]);
      }
      if (!ok) continue;
      if (best_ecc == -1 || ecc < best_ecc) {
        best_ecc = ecc;
        proj.center = cand;
      }
    }
    if (proj.center == -1) proj.center = proj.members.front();
    out.clusters.push_back(std::move(proj));
  }
  return out;
}

Rational girth_degree_floor(const Graph& g, int k) {
  if (k < 2) throw InputError("girth_degree_floor requires k >= 2");
  int gg = girth(g);
  if (gg != kGirthInfinite && gg < k + 1)
    throw InputError("girth_degree_floor requires girth >= k+1 (girth is " +
                     std::to_string(gg) + ")");
  return edge_density(g);
}

}  // namespace gencol
