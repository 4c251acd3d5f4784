#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/rational.hpp"

namespace gencol {

// One evaluated order in a sampling experiment.
struct OrderRow {
  std::string kind;      // "random", "degeneracy", "greedy-adm", "identity"
  int index = -1;        // sample index for random orders
  Rational statistic;    // W_r or the Cauchy-Schwarz slack
  bool pass = false;
};

struct GirthLbReport {
  int d = 0;
  int r = 0;
  Rational bound;        // d/(d-3) * (((d-1)/2)^r - 1)
  Rational min_observed;
  bool all_pass = false;
  std::vector<OrderRow> rows;
};

// For a d-regular graph (d >= 4) of girth >= 2r+1: every sampled and
// heuristic order must average at least `bound` weakly reached vertices
// (self excluded). Exact rational comparison.
GirthLbReport girth_lb_experiment(const Graph& g, int r, int samples, std::uint64_t seed);

struct CauchyReport {
  int r = 0;
  bool all_pass = false;
  Rational min_slack;  // min over orders of U_2r - (U_r^2/(2n) - U_r/2)
  std::vector<OrderRow> rows;
};

// For girth >= 4r+1: each order's strong-reach layer sums satisfy
// U_2r >= U_r^2/(2n) - U_r/2, compared as exact rationals.
CauchyReport cauchy_experiment(const Graph& g, int r, int samples, std::uint64_t seed);

}  // namespace gencol
