#include "gencol/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

#include "gencol/errors.hpp"

namespace gencol {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), m_(0), adj_(n) {
  if (n < 0) throw InputError("negative vertex count");
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  for (auto [u, v] : seen) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool Graph::is_regular(int d) const {
  for (Vertex v = 0; v < n_; ++v)
    if (degree(v) != d) return false;
  return true;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  auto dist = bfs_distances(*this, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex id " + std::to_string(v) + " out of range [0," +
                     std::to_string(n_) + ")");
}

BipartiteGraph::BipartiteGraph(Graph g, std::vector<int> sides)
    : graph(std::move(g)), side(std::move(sides)) {
  if (static_cast<int>(side.size()) != graph.vertex_count())
    throw InputError("side vector size mismatch");
  for (int s : side)
    if (s != 1 && s != 2) throw InputError("bipartition sides must be 1 or 2");
  for (auto [u, v] : graph.edges())
    if (side[u] == side[v])
      throw InputError("edge inside one side of the bipartition: " + std::to_string(u) + " " +
                       std::to_string(v));
}

BipartiteGraph BipartiteGraph::from_graph(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> side(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] != 0) continue;
    side[s] = 1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == 0) {
          side[w] = 3 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          throw InputError("graph is not bipartite (odd cycle through vertex " +
                           std::to_string(w) + ")");
        }
      }
    }
  }
  return BipartiteGraph(g, side);
}

std::vector<Vertex> BipartiteGraph::side_vertices(int s) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph.vertex_count(); ++v)
    if (side[v] == s) out.push_back(v);
  return out;
}

std::vector<Vertex> bfs_ball(const Graph& g, Vertex v, int r) {
  g.check_vertex(v);
  if (r < 0) throw InputError("negative radius");
  std::vector<int> dist(g.vertex_count(), -1);
  dist[v] = 0;
  std::vector<Vertex> ball{v};
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] >= r) continue;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        ball.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

std::vector<int> bfs_distances(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<int> dist(g.vertex_count(), -1);
  dist[v] = 0;
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int girth(const Graph& g) {
  // Shortest cycle through each BFS root: a non-tree edge {u,w} with
  // dist[w] >= dist[u] closes a cycle of length dist[u]+dist[w]+1.
  int best = -1;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> parent(g.vertex_count(), -1);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && dist[w] >= dist[u]) {
          int cycle = dist[u] + dist[w] + 1;
          if (best == -1 || cycle < best) best = cycle;
        }
      }
    }
  }
  return best == -1 ? kGirthInfinite : best;
}

Graph subdivide(const Graph& g, int s) {
  if (s < 0) throw InputError("negative subdivision depth");
  if (s == 0) return g;
  auto original = g.edges();
  int n = g.vertex_count();
  std::vector<Edge> out;
  int next = n;
  for (auto [u, v] : original) {
    Vertex prev = u;
    for (int i = 0; i < s; ++i) {
      out.push_back({prev, next});
      prev = next++;
    }
    out.push_back({prev, v});
  }
  return Graph(n + s * static_cast<int>(original.size()), out);
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.push_back({u, v});
  return Graph(n, out);
}

Rational edge_density(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("edge density of the empty graph");
  return Rational(g.edge_count(), g.vertex_count());
}

namespace {

struct CageSpec {
  int n;
  int degree;
  int girth;
  std::vector<Edge> edges;
};

// Petersen: outer 5-cycle, inner pentagram, spokes.
const CageSpec kPetersen = {10, 3, 5,
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}};

// Heawood graph, LCF [5,-5]^7: the (3,6)-cage.
const CageSpec kHeawood = {14, 3, 6,
                           {{0, 1}, {0, 5}, {0, 13}, {1, 2}, {1, 10}, {2, 3}, {2, 7},
                            {3, 4}, {3, 12}, {4, 5}, {4, 9}, {5, 6}, {6, 7}, {6, 11},
                            {7, 8}, {8, 9}, {8, 13}, {9, 10}, {10, 11}, {11, 12}, {12, 13}}};

// McGee graph, LCF [12,7,-7]^8: the (3,7)-cage.
const CageSpec kMcGee = {24, 3, 7,
                         {{0, 1},  {0, 12},  {0, 23},  {1, 2},   {1, 8},   {2, 3},
                          {2, 19}, {3, 4},   {3, 15},  {4, 5},   {4, 11},  {5, 6},
                          {5, 22}, {6, 7},   {6, 18},  {7, 8},   {7, 14},  {8, 9},
                          {9, 10}, {9, 21},  {10, 11}, {10, 17}, {11, 12}, {12, 13},
                          {13, 14}, {13, 20}, {14, 15}, {15, 16}, {16, 17}, {16, 23},
                          {17, 18}, {18, 19}, {19, 20}, {20, 21}, {21, 22}, {22, 23}}};

// Robertson graph: the unique (4,5)-cage on 19 vertices.
const CageSpec kRobertson = {19, 4, 5,
                             {{0, 1},   {0, 6},   {0, 15},  {0, 18},  {1, 2},   {1, 9},
                              {1, 13},  {2, 3},   {2, 7},   {2, 17},  {3, 4},   {3, 11},
                              {3, 15},  {4, 5},   {4, 8},   {4, 18},  {5, 6},   {5, 13},
                              {5, 16},  {6, 7},   {6, 11},  {7, 8},   {7, 14},  {8, 9},
                              {8, 12},  {9, 10},  {9, 16},  {10, 11}, {10, 14}, {10, 18},
                              {11, 12}, {12, 13}, {12, 17}, {13, 14}, {14, 15}, {15, 16},
                              {16, 17}, {17, 18}}};

// Tutte-Coxeter graph, LCF [-13,-9,7,-7,9,13]^5: the (3,8)-cage.
const CageSpec kTutteCoxeter = {
    30, 3, 8,
    {{0, 1},   {0, 17},  {0, 29},  {1, 2},   {1, 22},  {2, 3},   {2, 9},   {3, 4},
     {3, 26},  {4, 5},   {4, 13},  {5, 6},   {5, 18},  {6, 7},   {6, 23},  {7, 8},
     {7, 28},  {8, 9},   {8, 15},  {9, 10},  {10, 11}, {10, 19}, {11, 12}, {11, 24},
     {12, 13}, {12, 29}, {13, 14}, {14, 15}, {14, 21}, {15, 16}, {16, 17}, {16, 25},
     {17, 18}, {18, 19}, {19, 20}, {20, 21}, {20, 27}, {21, 22}, {22, 23}, {23, 24},
     {24, 25}, {25, 26}, {26, 27}, {27, 28}, {28, 29}}};

// Point-line incidence graph of PG(2,3): points 0..12, lines 13..25.
// 4-regular, girth 6.
const CageSpec kLeviPg23 = {
    26, 4, 6,
    {{0, 14},  {0, 17},  {0, 20},  {0, 23},  {1, 13},  {1, 17},  {1, 18},  {1, 19},
     {2, 16},  {2, 17},  {2, 22},  {2, 24},  {3, 15},  {3, 17},  {3, 21},  {3, 25},
     {4, 13},  {4, 14},  {4, 15},  {4, 16},  {5, 14},  {5, 19},  {5, 22},  {5, 25},
     {6, 14},  {6, 18},  {6, 21},  {6, 24},  {7, 13},  {7, 23},  {7, 24},  {7, 25},
     {8, 16},  {8, 19},  {8, 21},  {8, 23},  {9, 15},  {9, 18},  {9, 22},  {9, 23},
     {10, 13}, {10, 20}, {10, 21}, {10, 22}, {11, 15}, {11, 19}, {11, 20}, {11, 24},
     {12, 16}, {12, 18}, {12, 20}, {12, 25}}};

Graph build_cage(const CageSpec& spec, const std::string& name) {
  Graph g(spec.n, spec.edges);
#ifndef NDEBUG
  if (!g.is_regular(spec.degree) || girth(g) != spec.girth)
    throw InvariantError("embedded cage data corrupt for " + name);
#endif
  (void)name;
  return g;
}

// Parses "name(a)" or "name(a,b)"; returns nullopt when `s` has no arguments.
std::optional<std::pair<std::string, std::vector<int>>> parse_args(const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos) return std::nullopt;
  if (s.back() != ')') throw InputError("malformed graph name: " + s);
  std::string base = s.substr(0, open);
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  std::vector<int> args;
  size_t pos = 0;
  while (pos < inner.size()) {
    size_t comma = inner.find(',', pos);
    std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      args.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("malformed graph parameter in: " + s);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return std::make_pair(base, args);
}

}  // namespace

Graph named_graph(const std::string& name) {
  if (name == "petersen") return build_cage(kPetersen, name);
  if (name == "heawood") return build_cage(kHeawood, name);
  if (name == "mcgee") return build_cage(kMcGee, name);
  if (name == "robertson") return build_cage(kRobertson, name);
  if (name == "tutte_coxeter") return build_cage(kTutteCoxeter, name);
  if (name == "levi_pg23") return build_cage(kLeviPg23, name);

  auto parsed = parse_args(name);
  if (!parsed) throw InputError("unknown graph name: " + name);
  const auto& [base, args] = *parsed;
  auto expect = [&](size_t count) {
    if (args.size() != count)
      throw InputError("graph " + base + " expects " + std::to_string(count) + " parameter(s)");
  };
  if (base == "clique") {
    expect(1);
    int n = args[0];
    if (n < 1) throw InputError("clique size must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
  }
  if (base == "cycle") {
    expect(1);
    int n = args[0];
    if (n < 3) throw InputError("cycle length must be >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
    return Graph(n, edges);
  }
  if (base == "path") {
    expect(1);
    int n = args[0];
    if (n < 1) throw InputError("path length must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    return Graph(n, edges);
  }
  if (base == "star") {
    expect(1);
    int leaves = args[0];
    if (leaves < 0) throw InputError("star leaf count must be >= 0");
    std::vector<Edge> edges;
    for (int u = 1; u <= leaves; ++u) edges.push_back({0, u});
    return Graph(leaves + 1, edges);
  }
  if (base == "complete_bipartite") {
    expect(2);
    int a = args[0], b = args[1];
    if (a < 1 || b < 1) throw InputError("complete_bipartite sides must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
      for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, edges);
  }
  throw InputError("unknown graph name: " + name);
}

}  // namespace gencol
