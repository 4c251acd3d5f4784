#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/order.hpp"

namespace gencol {

// Rooted tree decomposition. Node 0 is the root unless stated otherwise;
// parent[root] == -1. Bags are sorted vertex lists.
struct TreeDecomposition {
  std::vector<int> parent;
  std::vector<std::vector<Vertex>> bags;
  int root = 0;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;
  // Every tree edge changes the bag by at most one vertex in each direction.
  bool is_smooth() const;
  std::vector<std::pair<int, int>> tree_edges() const;
};

struct TdValidity {
  bool valid = false;
  int width = -1;
  bool smooth = false;
  std::string violation;  // empty when valid
};

// Checks vertex coverage, edge coverage and bag connectivity; reports the
// first violation. Optionally spot-checks the separator property on seeded
// random node triples.
TdValidity validate_td(const Graph& g, const TreeDecomposition& td,
                       int separator_spot_checks = 0, std::uint64_t seed = 0);

// Equivalent smooth decomposition of the same width: subset bags are
// contracted, then every remaining edge is interpolated by dropping and
// adding one vertex at a time. Already-smooth input is returned unchanged.
TreeDecomposition make_smooth(const Graph& g, const TreeDecomposition& td);

// The ordering extracted from a smooth rooted decomposition: vertices sorted
// by the first node (in root-first tree order) whose bag contains them, ties
// in the root bag broken by vertex id.
LinearOrder td_order(const Graph& g, const TreeDecomposition& td);

struct BinomialCertificate {
  int value = 0;      // eval_wcol(g, td_order, r)
  long long bound = 0;  // C(r+k, k)
  int width = 0;
  int r = 0;
};

// Certifies eval_wcol(g, td_order(g, td), r) <= C(r+k, k) for a smooth
// width-k decomposition; a violated bound is an InvariantError.
BinomialCertificate binomial_certificate(const Graph& g, const TreeDecomposition& td, int r);

// Decomposition from an elimination order: bag(v) = v plus its processed
// neighbourhood at elimination time.
TreeDecomposition td_from_elimination(const Graph& g, const std::vector<Vertex>& elimination);

long long binomial(int n, int k);

class Rng;

// Random partial k-tree: grow a k-tree by attaching each new vertex to a
// random existing k-clique, then keep every edge with probability
// keep_num/keep_den. The returned decomposition (bags from the k-tree
// construction, already smooth) stays valid for the subgraph and has width
// exactly k.
std::pair<Graph, TreeDecomposition> random_partial_ktree(int k, int n, Rng& rng,
                                                         std::uint64_t keep_num = 7,
                                                         std::uint64_t keep_den = 10);

}  // namespace gencol
