#include "gencol/treedec.hpp"

#include "doctest.h"
#include "gencol/errors.hpp"
#include "gencol/exact.hpp"
#include "gencol/reach.hpp"
#include "gencol/rng.hpp"

using namespace gencol;

namespace {

TreeDecomposition path_decomposition(int n) {
  // bags {i, i+1} along a path
  TreeDecomposition td;
  for (int i = 0; i + 1 < n; ++i) {
    td.bags.push_back({i, i + 1});
    td.parent.push_back(i - 1);
  }
  td.root = 0;
  return td;
}

}  // namespace

TEST_CASE("validate_td accepts a path decomposition") {
  Graph p5 = named_graph("path(5)");
  auto td = path_decomposition(5);
  auto v = validate_td(p5, td, 50, 7);
  CHECK(v.valid);
  CHECK(v.width == 1);
  CHECK(v.smooth);
}

TEST_CASE("validate_td names the first violation") {
  Graph p4 = named_graph("path(4)");
  TreeDecomposition missing_edge;
  missing_edge.bags = {{0, 1}, {2, 3}};
  missing_edge.parent = {-1, 0};
  auto v = validate_td(p4, missing_edge);
  CHECK_FALSE(v.valid);
  CHECK(v.violation.find("uncovered") != std::string::npos);

  TreeDecomposition missing_vertex;
  missing_vertex.bags = {{0, 1}, {1, 2}};
  missing_vertex.parent = {-1, 0};
  CHECK(validate_td(p4, missing_vertex).violation.find("vertex 3") != std::string::npos);

  TreeDecomposition disconnected;
  disconnected.bags = {{0, 1}, {1, 2}, {2, 3}, {0, 1}};
  disconnected.parent = {-1, 0, 1, 2};
  auto dv = validate_td(p4, disconnected);
  CHECK_FALSE(dv.valid);
  CHECK(dv.violation.find("not connected") != std::string::npos);
}

TEST_CASE("validate_td on a C4 decomposition of width 2") {
  Graph c4 = named_graph("cycle(4)");
  TreeDecomposition td;
  td.bags = {{0, 1, 3}, {1, 2, 3}};
  td.parent = {-1, 0};
  auto v = validate_td(c4, td, 20, 3);
  CHECK(v.valid);
  CHECK(v.width == 2);
}

TEST_CASE("make_smooth leaves smooth input alone and fixes rough edges") {
  Graph p5 = named_graph("path(5)");
  auto smooth = path_decomposition(5);
  auto same = make_smooth(p5, smooth);
  CHECK(same.node_count() == smooth.node_count());

  // adjacent bags differing by two vertices each way need three steps
  TreeDecomposition wide;
  wide.bags = {{0, 1}, {2, 3}};
  wide.parent = {-1, 0};
  Graph two_edges(4, {{0, 1}, {2, 3}});
  auto fixed = make_smooth(two_edges, wide);
  auto vf = validate_td(two_edges, fixed);
  CHECK(vf.valid);
  CHECK(vf.smooth);
  CHECK(vf.width == 1);
  CHECK(fixed.node_count() == 5);

  // one vertex swapped: a single interpolated bag
  TreeDecomposition swap;
  swap.bags = {{0, 1, 2}, {1, 2, 3}};
  swap.parent = {-1, 0};
  CHECK(swap.is_smooth());
  TreeDecomposition two_out;
  two_out.bags = {{0, 1, 2}, {2, 3, 4}};
  two_out.parent = {-1, 0};
  Graph host(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {2, 4}});
  auto fixed2 = make_smooth(host, two_out);
  auto v2 = validate_td(host, fixed2, 10, 1);
  CHECK(v2.valid);
  CHECK(v2.smooth);
  CHECK(v2.width == 2);
  CHECK(fixed2.node_count() == 5);
}

TEST_CASE("make_smooth preserves validity and width on partial 2-trees") {
  Rng rng(11);
  for (int i = 0; i < 10; ++i) {
    auto [g, td] = random_partial_ktree(2, rng.uniform_int(4, 14), rng);
    auto v = validate_td(g, td);
    REQUIRE(v.valid);
    auto smooth = make_smooth(g, td);
    auto vs = validate_td(g, smooth, 30, i);
    CHECK(vs.valid);
    CHECK(vs.smooth);
    CHECK(vs.width == v.width);
  }
}

TEST_CASE("td_order requires smoothness and orders root-first") {
  Graph star = named_graph("star(3)");
  TreeDecomposition td;
  td.bags = {{0}, {0, 1}, {0, 2}, {0, 3}};
  td.parent = {-1, 0, 0, 0};
  auto order = td_order(star, td);
  CHECK(order.rank(0) == 1);  // center first

  Graph p5 = named_graph("path(5)");
  auto pd = path_decomposition(5);
  auto po = td_order(p5, pd);
  for (int v = 0; v < 5; ++v) CHECK(po.rank(v) == v + 1);

  TreeDecomposition rough;
  rough.bags = {{0, 1, 2, 3}, {0}};
  rough.parent = {-1, 0};
  Graph k4 = named_graph("clique(4)");
  CHECK_THROWS_AS(td_order(k4, rough), InputError);
}

TEST_CASE("binomial certificate on trees, cliques and partial k-trees") {
  Graph p6 = named_graph("path(6)");
  auto pd = path_decomposition(6);
  for (int r = 1; r <= 4; ++r) {
    auto cert = binomial_certificate(p6, pd, r);
    CHECK(cert.bound == r + 1);
    CHECK(cert.value <= r + 1);
  }
  Graph k4 = named_graph("clique(4)");
  TreeDecomposition single;
  single.bags = {{0, 1, 2, 3}};
  single.parent = {-1};
  for (int r = 1; r <= 3; ++r) CHECK(binomial_certificate(k4, single, r).value == 4);

  Rng rng(5150);
  for (int i = 0; i < 8; ++i) {
    int k = rng.uniform_int(1, 3);
    auto [g, td] = random_partial_ktree(k, rng.uniform_int(k + 2, 40), rng);
    for (int r = 1; r <= 4; ++r) {
      auto cert = binomial_certificate(g, td, r);
      CHECK(cert.value <= cert.bound);
      CHECK(cert.bound == binomial(r + k, k));
    }
  }
}

TEST_CASE("td_from_elimination produces valid decompositions of optimal width") {
  Rng rng(777);
  for (int i = 0; i < 15; ++i) {
    int n = rng.uniform_int(2, 9);
    Graph g = rng.random_graph(n, 1, 2);
    auto tw = treewidth_small(g);
    auto td = td_from_elimination(g, tw.elimination);
    auto v = validate_td(g, td, 20, i);
    CAPTURE(i);
    CHECK(v.valid);
    CHECK(v.width == tw.width);
    // smoothing then ordering certifies the binomial bound end to end
    auto smooth = make_smooth(g, td);
    auto cert = binomial_certificate(g, smooth, 3);
    CHECK(cert.value <= cert.bound);
  }
}

TEST_CASE("random partial k-trees come with valid smooth width-k decompositions") {
  Rng rng(31);
  for (int k : {1, 2, 3}) {
    auto [g, td] = random_partial_ktree(k, 25, rng);
    auto v = validate_td(g, td, 40, k);
    CHECK(v.valid);
    CHECK(v.width == k);
    CHECK(v.smooth);
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 3) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(2, 5) == 0);
}
