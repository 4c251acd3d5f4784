#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gencol/rational.hpp"

namespace gencol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 with sorted
// neighbour lists. All modules share this representation; files and
// reports use the same dense 0-based vertex ids.
class Graph {
 public:
  Graph() : n_(0), m_(0) {}
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  std::vector<Edge> edges() const;

  // True when every vertex has degree d.
  bool is_regular(int d) const;
  bool is_connected() const;

  void check_vertex(Vertex v) const;

 private:
  int n_;
  long long m_;
  std::vector<std::vector<Vertex>> adj_;
};

// Graph plus a proper 2-colouring (sides 1 and 2).
struct BipartiteGraph {
  Graph graph;
  std::vector<int> side;  // per vertex, 1 or 2

  BipartiteGraph(Graph g, std::vector<int> sides);

  // Detects a bipartition by BFS 2-colouring; throws InputError on odd cycles.
  static BipartiteGraph from_graph(const Graph& g);

  std::vector<Vertex> side_vertices(int s) const;
};

constexpr int kGirthInfinite = -1;  // forests have no cycle

// N_r(v): all vertices at distance <= r from v. Always contains v.
std::vector<Vertex> bfs_ball(const Graph& g, Vertex v, int r);

// Distances from v (-1 where unreachable).
std::vector<int> bfs_distances(const Graph& g, Vertex v);

// Length of a shortest cycle, kGirthInfinite for forests.
int girth(const Graph& g);

// Replaces every edge by a path with exactly s new internal vertices.
// Original ids are preserved; internal vertices of edge #i (in edges()
// order) get ids n + i*s .. n + i*s + s - 1, in path order.
Graph subdivide(const Graph& g, int s);

Graph complement(const Graph& g);

// |E| / |V| as an exact rational; InputError on the empty graph.
Rational edge_density(const Graph& g);

// Named generators: petersen, heawood, mcgee, robertson, tutte_coxeter,
// levi_pg23, clique(n), cycle(n), path(n), star(n), complete_bipartite(a,b).
// Cage graphs come from embedded edge lists and are degree/girth-checked at
// construction.
Graph named_graph(const std::string& name);

}  // namespace gencol
