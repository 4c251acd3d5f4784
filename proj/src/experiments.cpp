#include "gencol/experiments.hpp"

#include <algorithm>

#include "gencol/errors.hpp"
#include "gencol/heuristics.hpp"
#include "gencol/reach.hpp"
#include "gencol/rng.hpp"

namespace gencol {

namespace {

int regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("empty graph");
  int d = g.degree(0);
  if (!g.is_regular(d)) throw InputError("graph is not regular");
  return d;
}

std::vector<std::pair<std::string, LinearOrder>> heuristic_orders(const Graph& g, int r) {
  return {{"identity", LinearOrder::identity(g.vertex_count())},
          {"degeneracy", degeneracy_order(g)},
          {"greedy-adm", greedy_adm_order(g, r).order}};
}

}  // namespace

GirthLbReport girth_lb_experiment(const Graph& g, int r, int samples, std::uint64_t seed) {
  if (r < 1) throw InputError("girth_lb requires r >= 1");
  GirthLbReport report;
  report.d = regular_degree(g);
  report.r = r;
  if (report.d < 4) throw InputError("girth_lb requires a d-regular graph with d >= 4");
  int gg = girth(g);
  if (gg != kGirthInfinite && gg < 2 * r + 1)
    throw InputError("girth_lb requires girth >= 2r+1 (girth is " + std::to_string(gg) + ")");

  Rational half_dm1(report.d - 1, 2);
  report.bound =
      Rational(report.d, report.d - 3) * (half_dm1.pow(r) - Rational(1));

  Rng rng(seed);
  bool first = true;
  auto evaluate = [&](const std::string& kind, int index, const LinearOrder& order) {
    Rational w = profile(g, order, r).W();
    OrderRow row{kind, index, w, w >= report.bound};
    if (first || w < report.min_observed) report.min_observed = w;
    first = false;
    report.rows.push_back(row);
  };
  for (const auto& [kind, order] : heuristic_orders(g, r)) evaluate(kind, -1, order);
  for (int i = 0; i < samples; ++i) evaluate("random", i, rng.random_order(g.vertex_count()));
  report.all_pass =
      std::all_of(report.rows.begin(), report.rows.end(), [](const OrderRow& r) { return r.pass; });
  return report;
}

CauchyReport cauchy_experiment(const Graph& g, int r, int samples, std::uint64_t seed) {
  if (r < 1) throw InputError("cauchy check requires r >= 1");
  CauchyReport report;
  report.r = r;
  int gg = girth(g);
  if (gg != kGirthInfinite && gg < 4 * r + 1)
    throw InputError("cauchy check requires girth >= 4r+1 (girth is " + std::to_string(gg) + ")");

  int n = g.vertex_count();
  if (n == 0) throw InputError("empty graph");
  Rng rng(seed);
  bool first = true;
  auto evaluate = [&](const std::string& kind, int index, const LinearOrder& order) {
    ReachProfile p = profile(g, order, 2 * r);
    long long u_r = p.U[r];  // strong-reach layer sums, U_i = sum_v |R_i(v)|
    long long u_2r = p.U[2 * r];
    Rational lhs(u_2r);
    Rational rhs = Rational(u_r) * Rational(u_r) / Rational(2LL * n) - Rational(u_r, 2);
    Rational slack = lhs - rhs;
    OrderRow row{kind, index, slack, lhs >= rhs};
    if (first || slack < report.min_slack) report.min_slack = slack;
    first = false;
    report.rows.push_back(row);
  };
  for (const auto& [kind, order] : heuristic_orders(g, std::max(1, r))) evaluate(kind, -1, order);
  for (int i = 0; i < samples; ++i) evaluate("random", i, rng.random_order(n));
  report.all_pass =
      std::all_of(report.rows.begin(), report.rows.end(), [](const OrderRow& r) { return r.pass; });
  return report;
}

}  // namespace gencol
