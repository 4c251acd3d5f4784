#include "gencol/io.hpp"

#include <sstream>

#include "doctest.h"
#include "gencol/errors.hpp"
#include "gencol/rng.hpp"

using namespace gencol;

TEST_CASE("edge list parsing") {
  std::istringstream good("# a comment\n3 2\n0 1\n# another\n1 2\n");
  Graph g = read_edge_list(good);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  std::istringstream loop("2 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), InputError);
  std::istringstream reversed("3 1\n2 1\n");
  CHECK_THROWS_AS(read_edge_list(reversed), InputError);
  std::istringstream dup("3 2\n0 1\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(dup), InputError);
  std::istringstream truncated("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(truncated), InputError);
}

TEST_CASE("edge list round trip") {
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    Graph g = rng.random_graph(rng.uniform_int(1, 12), 1, 3);
    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream in(out.str());
    Graph back = read_edge_list(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("order file round trip and validation") {
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    int n = rng.uniform_int(1, 9);
    LinearOrder order = rng.random_order(n);
    std::ostringstream out;
    write_order(order, out);
    std::istringstream in(out.str());
    CHECK(read_order(in, n).ranks() == order.ranks());
  }
  std::istringstream bad("1 1 2\n");
  CHECK_THROWS_AS(read_order(bad, 3), InputError);
  std::istringstream short_line("1 2\n");
  CHECK_THROWS_AS(read_order(short_line, 3), InputError);
}

TEST_CASE("td file round trip keeps the root at bag 1") {
  TreeDecomposition td;
  td.bags = {{0, 1}, {1, 2}, {2, 3}};
  td.parent = {1, 2, -1};
  td.root = 2;
  std::ostringstream out;
  write_td(td, 4, out);
  std::istringstream in(out.str());
  TreeDecomposition back = read_td(in);
  CHECK(back.node_count() == 3);
  CHECK(back.root == 0);
  CHECK(back.bags[0] == std::vector<Vertex>{2, 3});  // the root bag
  CHECK(back.width() == td.width());

  std::istringstream bad_header("s td 2 2\n");
  CHECK_THROWS_AS(read_td(bad_header), InputError);
  std::istringstream missing_bag("s td 2 2 3\nb 1 0 1\n1 2\n");
  CHECK_THROWS_AS(read_td(missing_bag), InputError);
  std::istringstream cyclic("s td 3 2 3\nb 1 0\nb 2 1\nb 3 2\n1 2\n1 2\n");
  CHECK_THROWS_AS(read_td(cyclic), InputError);
}

TEST_CASE("cover file round trip") {
  Cover cover;
  cover.r = 2;
  cover.clusters.push_back({1, {0, 1, 4}});
  cover.clusters.push_back({3, {3}});
  std::ostringstream out;
  write_cover(cover, out);
  std::istringstream in(out.str());
  Cover back = read_cover(in, 2);
  REQUIRE(back.clusters.size() == 2);
  CHECK(back.clusters[0].center == 1);
  CHECK(back.clusters[0].members == std::vector<Vertex>{0, 1, 4});

  std::istringstream missing_center("5: 0 1\n");
  CHECK_THROWS_AS(read_cover(missing_center, 1), InputError);
}
