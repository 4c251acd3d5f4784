#pragma once

#include <iosfwd>
#include <string>

#include "gencol/cover.hpp"
#include "gencol/graph.hpp"
#include "gencol/order.hpp"
#include "gencol/treedec.hpp"

namespace gencol {

// Edge-list format: first non-comment line "n m", then m lines "u v" with
// 0 <= u < v < n. '#' starts a comment. Loops and duplicates are rejected.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// Order format: one line "rank(0) rank(1) ... rank(n-1)", a permutation of 1..n.
LinearOrder read_order(std::istream& in, int n);
void write_order(const LinearOrder& order, std::ostream& out);

// PACE-2017-style decomposition: header "s td <bags> <width+1> <n>", bag
// lines "b <bag-id> <v...>" (bag ids 1-based, vertex ids 0-based), then tree
// edges "<id> <id>". Bag 1 is the root. 'c' starts a comment.
TreeDecomposition read_td(std::istream& in);
void write_td(const TreeDecomposition& td, int n, std::ostream& out);

// Cover format: one cluster per line, "center: v1 v2 ...".
Cover read_cover(std::istream& in, int r);
void write_cover(const Cover& cover, std::ostream& out);

Graph load_graph_file(const std::string& path);
LinearOrder load_order_file(const std::string& path, int n);
TreeDecomposition load_td_file(const std::string& path);
Cover load_cover_file(const std::string& path, int r);
void save_to_file(const std::string& path, const std::string& contents);

}  // namespace gencol
