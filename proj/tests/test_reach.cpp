#include "gencol/reach.hpp"

#include <algorithm>

#include "doctest.h"
#include "gencol/errors.hpp"
#include "gencol/rng.hpp"
#include "oracles.hpp"

using namespace gencol;

namespace {

LinearOrder increasing(int n) { return LinearOrder::identity(n); }

}  // namespace

TEST_CASE("wreach basics") {
  Graph p3 = named_graph("path(3)");
  auto order = increasing(3);
  // from the top of a decreasing path everything is reachable
  CHECK(wreach(p3, order, 2, 2) == std::vector<Vertex>{0, 1, 2});

  Graph k3 = named_graph("clique(3)");
  CHECK(wreach(k3, increasing(3), 2, 1) == std::vector<Vertex>{0, 1, 2});

  // star with the center ranked last
  Graph star = named_graph("star(3)");
  LinearOrder center_last({4, 1, 2, 3});
  auto ws = wreach(star, center_last, 0, 2);
  CHECK(ws.size() == 4);
}

TEST_CASE("sreach basics") {
  Graph p3 = named_graph("path(3)");
  // a blocked: the internal vertex b sits below c? no: L(b) < L(c) blocks it
  CHECK(sreach(p3, increasing(3), 2, 2) == std::vector<Vertex>{1, 2});
  Graph k3 = named_graph("clique(3)");
  CHECK(sreach(k3, increasing(3), 2, 1) == std::vector<Vertex>{0, 1, 2});
  Graph c5 = named_graph("cycle(5)");
  CHECK(sreach(c5, increasing(5), 4, 2).size() == 3);
}

TEST_CASE("adm_at basics") {
  Graph c5 = named_graph("cycle(5)");
  // the order minimum only has its trivial path
  CHECK(adm_at(c5, increasing(5), 0, 3) == 1);
  Graph star = named_graph("star(5)");
  LinearOrder center_last({6, 1, 2, 3, 4, 5});
  CHECK(adm_at(star, center_last, 0, 1) == 6);
  CHECK(adm_at(c5, increasing(5), 4, 2) == 3);
}

TEST_CASE("eval operators") {
  CHECK(eval_wcol(named_graph("clique(6)"), increasing(6), 1) == 6);
  CHECK(eval_wcol(named_graph("path(5)"), increasing(5), 2) == 3);
  CHECK(eval_adm(named_graph("cycle(5)"), increasing(5), 2) == 3);
  CHECK(eval_col(named_graph("path(3)"), increasing(3), 2) == 2);
}

TEST_CASE("reach operators agree with the path-enumeration oracle") {
  Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    Graph g = rng.random_graph(7, 1, 2);
    LinearOrder order = rng.random_order(7);
    int r = rng.uniform_int(0, 4);
    for (Vertex v = 0; v < 7; ++v) {
      CAPTURE(i);
      CAPTURE(v);
      CAPTURE(r);
      CHECK(wreach(g, order, v, r) == oracle::wreach_oracle(g, order, v, r));
      CHECK(sreach(g, order, v, r) == oracle::sreach_oracle(g, order, v, r));
      CHECK(adm_at(g, order, v, r) == oracle::adm_oracle(g, order, v, r));
    }
  }
}

TEST_CASE("containment and monotonicity invariants") {
  Rng rng(4242);
  for (int i = 0; i < 20; ++i) {
    Graph g = rng.random_graph(8, 2, 5);
    LinearOrder order = rng.random_order(8);
    for (Vertex v = 0; v < 8; ++v) {
      std::vector<Vertex> prev_w, prev_s;
      for (int r = 0; r <= 4; ++r) {
        auto w = wreach(g, order, v, r);
        auto s = sreach(g, order, v, r);
        CHECK(std::includes(w.begin(), w.end(), s.begin(), s.end()));
        CHECK(std::binary_search(s.begin(), s.end(), v));
        CHECK(std::includes(w.begin(), w.end(), prev_w.begin(), prev_w.end()));
        CHECK(std::includes(s.begin(), s.end(), prev_s.begin(), prev_s.end()));
        CHECK(adm_at(g, order, v, r) <= static_cast<int>(s.size()));
        // weak reach never exceeds the own rank
        CHECK(static_cast<int>(w.size()) <= order.rank(v));
        prev_w = w;
        prev_s = s;
      }
    }
  }
}

TEST_CASE("profile layers and aggregates") {
  Graph petersen = named_graph("petersen");
  Rng rng(7);
  for (int i = 0; i < 5; ++i) {
    LinearOrder order = rng.random_order(10);
    ReachProfile p = profile(petersen, order, 2);
    // layer sums match the set sizes
    for (Vertex v = 0; v < 10; ++v) {
      CHECK(p.wreach_total(v) == static_cast<long long>(wreach(petersen, order, v, 2).size()));
      CHECK(p.sreach_total(v) == static_cast<long long>(sreach(petersen, order, v, 2).size()));
    }
    // n * W_r == sum over v of (|WReach_r[v]| - 1), exactly
    long long total = 0;
    for (Vertex v = 0; v < 10; ++v) total += p.wreach_total(v) - 1;
    CHECK(p.W() == Rational(total, 10));
    // d-regular: w_1 = c_1 = d/2
    CHECK(p.w(1) == Rational(3, 2));
    CHECK(p.c(1) == Rational(3, 2));
  }
}

TEST_CASE("profile on the edgeless graph") {
  Graph g(4, {});
  ReachProfile p = profile(g, LinearOrder::identity(4), 3);
  for (int i = 1; i <= 3; ++i) {
    CHECK(p.S[i] == 0);
    CHECK(p.U[i] == 0);
  }
  CHECK(p.W() == Rational(0));
}

TEST_CASE("input validation") {
  Graph g = named_graph("path(3)");
  CHECK_THROWS_AS(wreach(g, increasing(3), 5, 1), InputError);
  CHECK_THROWS_AS(wreach(g, increasing(3), 0, -1), InputError);
  CHECK_THROWS_AS(eval_wcol(g, increasing(4), 1), InputError);
}
