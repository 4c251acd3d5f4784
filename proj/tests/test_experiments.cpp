#include "gencol/experiments.hpp"

#include "doctest.h"
#include "gencol/errors.hpp"
#include "gencol/graph.hpp"

using namespace gencol;

TEST_CASE("girth lower bound on the robertson graph") {
  Graph robertson = named_graph("robertson");
  auto r2 = girth_lb_experiment(robertson, 2, 50, 1);
  CHECK(r2.d == 4);
  CHECK(r2.bound == Rational(5));
  CHECK(r2.all_pass);
  CHECK(r2.min_observed >= Rational(5));

  // r = 1: equality d/2 for every order
  auto r1 = girth_lb_experiment(robertson, 1, 50, 2);
  CHECK(r1.bound == Rational(2));
  for (const auto& row : r1.rows) CHECK(row.statistic == Rational(2));
}

TEST_CASE("girth lower bound on the levi graph") {
  Graph levi = named_graph("levi_pg23");
  auto rep = girth_lb_experiment(levi, 2, 25, 3);
  CHECK(rep.all_pass);
}

TEST_CASE("girth lower bound preconditions") {
  CHECK_THROWS_AS(girth_lb_experiment(named_graph("cycle(8)"), 2, 5, 1), InputError);
  CHECK_THROWS_AS(girth_lb_experiment(named_graph("petersen"), 2, 5, 1), InputError);
  // robertson has girth 5 < 2*3+1
  CHECK_THROWS_AS(girth_lb_experiment(named_graph("robertson"), 3, 5, 1), InputError);
}

TEST_CASE("cauchy-schwarz intermediate inequality") {
  auto petersen = cauchy_experiment(named_graph("petersen"), 1, 100, 4);
  CHECK(petersen.all_pass);
  CHECK(petersen.min_slack >= Rational(0));
  auto mcgee = cauchy_experiment(named_graph("mcgee"), 1, 50, 5);
  CHECK(mcgee.all_pass);
  // girth 7 also supports r = 1 only; 4r+1 = 9 > 7 for r = 2
  CHECK_THROWS_AS(cauchy_experiment(named_graph("mcgee"), 2, 5, 1), InputError);

  // edgeless graphs: 0 >= 0 for any order
  auto empty = cauchy_experiment(Graph(6, {}), 1, 10, 6);
  CHECK(empty.all_pass);
  CHECK(empty.min_slack == Rational(0));
}

TEST_CASE("reports are deterministic for a fixed seed") {
  Graph robertson = named_graph("robertson");
  auto a = girth_lb_experiment(robertson, 2, 20, 99);
  auto b = girth_lb_experiment(robertson, 2, 20, 99);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].statistic == b.rows[i].statistic);
}
