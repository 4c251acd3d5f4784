#pragma once

#include <vector>

#include "gencol/graph.hpp"
#include "gencol/order.hpp"
#include "gencol/rational.hpp"

namespace gencol {

// Vertices weakly r-reachable from v: endpoints u of paths of length <= r
// from v on which u is the order-minimum. Sorted; always contains v.
std::vector<Vertex> wreach(const Graph& g, const LinearOrder& order, Vertex v, int r);

// Strongly r-reachable: additionally some witnessing path keeps all its
// internal vertices above v in the order. Sorted; always contains v.
std::vector<Vertex> sreach(const Graph& g, const LinearOrder& order, Vertex v, int r);

// r-admissibility of v: maximum family of length-<=r paths from v to
// vertices no larger than v, meeting pairwise in v only. The length-0 path
// counts, so the value is always >= 1.
int adm_at(const Graph& g, const LinearOrder& order, Vertex v, int r);

// max over v of |wreach| / |sreach| / adm_at for the fixed order.
int eval_wcol(const Graph& g, const LinearOrder& order, int r);
int eval_col(const Graph& g, const LinearOrder& order, int r);
int eval_adm(const Graph& g, const LinearOrder& order, int r);

// Per-vertex layered reach counts plus the aggregate statistics used by the
// regular-girth experiments. Layer i counts vertices whose minimal weak
// (resp. strong) reach radius is exactly i; layer 0 is the vertex itself and
// is excluded from the averaged sums.
struct ReachProfile {
  int n = 0;
  int r = 0;
  // layer counts indexed [v][i], i = 0..r
  std::vector<std::vector<int>> wreach_layers;
  std::vector<std::vector<int>> sreach_layers;
  // S[i] = sum_v wreach_layers[v][i], U[i] likewise for sreach
  std::vector<long long> S;
  std::vector<long long> U;

  long long wreach_total(Vertex v) const;  // |WReach_r[v]|
  long long sreach_total(Vertex v) const;  // |SReach_r[v]|

  Rational w(int i) const { return Rational(S.at(i), n); }
  Rational c(int i) const { return Rational(U.at(i), n); }
  // Sums over layers 1..r (the self-layer never contributes).
  Rational W() const;
  Rational C() const;
};

ReachProfile profile(const Graph& g, const LinearOrder& order, int r);

}  // namespace gencol
