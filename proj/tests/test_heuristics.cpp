#include "gencol/heuristics.hpp"

#include "doctest.h"
#include "gencol/errors.hpp"
#include "gencol/exact.hpp"
#include "gencol/reach.hpp"
#include "gencol/rng.hpp"
#include "oracles.hpp"

using namespace gencol;

TEST_CASE("b_r fixed cases") {
  Graph k3 = named_graph("clique(3)");
  CHECK(b_r(k3, {0, 1, 2}, 0, 1) == 3);
  Graph p3 = named_graph("path(3)");
  CHECK(b_r(p3, {0, 2}, 0, 2) == 2);
  // antipodal pair on the 5-cycle: both arcs end in the same S-vertex,
  // so at most one of them can be packed
  Graph c5 = named_graph("cycle(5)");
  CHECK(b_r(c5, {0, 2}, 0, 2) == 2);
  CHECK(b_r(c5, {0, 2}, 0, 3) == 2);
  CHECK(b_r(c5, {0, 2, 3}, 0, 3) == 3);
  CHECK(b_r(c5, {0, 1, 2, 3, 4}, 0, 1) == 3);
  CHECK_THROWS_AS(b_r(p3, {1, 2}, 0, 2), InputError);
}

TEST_CASE("b_r agrees with the oracle and respects the degree cap") {
  Rng rng(6161);
  for (int i = 0; i < 40; ++i) {
    int n = rng.uniform_int(4, 8);
    Graph g = rng.random_graph(n, 1, 2);
    std::vector<Vertex> s_set;
    for (Vertex v = 0; v < n; ++v)
      if (rng.chance(1, 2)) s_set.push_back(v);
    if (s_set.empty()) s_set.push_back(0);
    Vertex v = s_set[rng.below(s_set.size())];
    int r = rng.uniform_int(1, 3);
    int value = b_r(g, s_set, v, r);
    CAPTURE(i);
    CHECK(value == oracle::b_r_oracle(g, s_set, v, r));
    CHECK(value <= 1 + g.degree(v));
  }
}

TEST_CASE("greedy_adm_order certificate equals its evaluation") {
  Rng rng(99);
  for (int i = 0; i < 15; ++i) {
    int n = rng.uniform_int(3, 9);
    Graph g = rng.random_graph(n, 1, 2);
    for (int r : {1, 2, 3}) {
      auto result = greedy_adm_order(g, r);
      CHECK(result.certificate == eval_adm(g, result.order, r));
    }
  }
}

TEST_CASE("greedy order upper-bounds the exact optimum and is often tight") {
  CHECK(greedy_adm_order(named_graph("clique(5)"), 2).certificate == 5);
  auto c5 = named_graph("cycle(5)");
  CHECK(greedy_adm_order(c5, 2).certificate == adm_exact(c5, 2).value);
  Rng rng(2024);
  for (int i = 0; i < 12; ++i) {
    int n = rng.uniform_int(3, 8);
    Graph g = rng.random_graph(n, 1, 2);
    for (int r : {1, 2, 3}) {
      CHECK(greedy_adm_order(g, r).certificate >= adm_exact(g, r).value);
    }
  }
  // trees at r=1: the greedy certificate matches the exact value 2
  Graph star = named_graph("star(6)");
  CHECK(greedy_adm_order(star, 1).certificate == 2);
}

TEST_CASE("degeneracy_order realises degeneracy + 1") {
  CHECK(eval_wcol(named_graph("path(7)"), degeneracy_order(named_graph("path(7)")), 1) == 2);
  CHECK(eval_wcol(named_graph("clique(4)"), degeneracy_order(named_graph("clique(4)")), 1) == 4);
  Graph petersen = named_graph("petersen");
  CHECK(eval_wcol(petersen, degeneracy_order(petersen), 1) == 4);
  Rng rng(4444);
  for (int i = 0; i < 20; ++i) {
    Graph g = rng.random_graph(rng.uniform_int(2, 10), 1, 2);
    CHECK(eval_wcol(g, degeneracy_order(g), 1) == degeneracy(g) + 1);
  }
}
