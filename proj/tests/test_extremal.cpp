#include "gencol/extremal.hpp"

#include "doctest.h"
#include "gencol/errors.hpp"
#include "gencol/exact.hpp"
#include "gencol/reach.hpp"

using namespace gencol;

TEST_CASE("size_estimate matches the recursion") {
  CHECK(size_estimate(1, 1) == 3);    // c = 2, two levels
  CHECK(size_estimate(1, 2) == 13);   // c = 3, 1 + 3 + 9
  CHECK(size_estimate(2, 1) == 13);   // c = 3, 1 + 3 + 9
  CHECK(size_estimate(1, 3) == 85);   // c = 4, 1 + 4 + 16 + 64
  CHECK(size_estimate(2, 2) == 43 + 36 * 6 * 43);
}

TEST_CASE("construction matches the size estimate and its invariants") {
  for (auto [k, r] : {std::pair{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}}) {
    CAPTURE(k);
    CAPTURE(r);
    auto inst = gen_gkr(k, r);
    CHECK(inst.graph.vertex_count() == size_estimate(k, r));
    CHECK(inst.c == binomial(r + k, k));
    CHECK(inst.td.node_count() == inst.graph.vertex_count());
    auto v = validate_td(inst.graph, inst.td, 25, 1);
    CHECK(v.valid);
    CHECK(v.width == k);

    // the node-to-vertex bijection is the identity: the root introduces
    // vertex 0 and every non-root node t introduces exactly vertex t
    CHECK(inst.td.bags[inst.td.root] == std::vector<Vertex>{0});
    for (int t = 0; t < inst.td.node_count(); ++t) {
      if (t == inst.td.root) continue;
      std::vector<Vertex> fresh;
      const auto& bag = inst.td.bags[t];
      const auto& parent_bag = inst.td.bags[inst.td.parent[t]];
      for (Vertex x : bag)
        if (!std::binary_search(parent_bag.begin(), parent_bag.end(), x)) fresh.push_back(x);
      CHECK(fresh == std::vector<Vertex>{t});
      CHECK(static_cast<int>(bag.size()) <= k + 1);
    }
  }
}

TEST_CASE("G(1,1) is the star on c+1 vertices under both base constructions") {
  auto inst = gen_gkr(1, 1);
  CHECK(inst.c == 2);
  CHECK(inst.graph.vertex_count() == 3);
  CHECK(inst.graph.edge_count() == 2);
  CHECK(inst.graph.degree(0) == 2);
}

TEST_CASE("exact lower bounds on the small instances") {
  auto g12 = gen_gkr(1, 2);
  CHECK(wcol_exact(g12.graph, 2, {.node_limit = 20'000'000}).value == 3);
  CHECK(wcol_exact(g12.graph, 1, {.node_limit = 20'000'000}).value == 2);
  auto g21 = gen_gkr(2, 1);
  CHECK(wcol_exact(g21.graph, 1, {.node_limit = 20'000'000}).value == 3);
  CHECK(degeneracy(g21.graph) == 2);
}

TEST_CASE("upper certificates via the smoothed decomposition") {
  for (auto [k, r] : {std::pair{1, 2}, {2, 1}, {2, 2}}) {
    auto inst = gen_gkr(k, r);
    auto smooth = make_smooth(inst.graph, inst.td);
    for (int rr = 1; rr <= r; ++rr) {
      auto cert = binomial_certificate(inst.graph, smooth, rr);
      CHECK(cert.value <= cert.bound);
    }
  }
}

TEST_CASE("the size cap guards the exponential construction") {
  CHECK_THROWS_AS(gen_gkr(3, 3), ResourceError);
  try {
    gen_gkr(3, 3);
  } catch (const ResourceError& e) {
    CHECK(e.lower_bound == size_estimate(3, 3));
  }
  CHECK_THROWS_AS(gen_gkr(0, 1), InputError);
}
