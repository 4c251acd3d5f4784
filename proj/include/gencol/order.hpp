#pragma once

#include <vector>

#include "gencol/errors.hpp"
#include "gencol/graph.hpp"

namespace gencol {

// Linear order on the vertices as a bijection onto ranks 1..n.
// rank(u) < rank(v) means u comes earlier (is "smaller").
class LinearOrder {
 public:
  LinearOrder() = default;

  // ranks[v] is the rank of vertex v; must be a permutation of 1..n.
  explicit LinearOrder(std::vector<int> ranks) : rank_(std::move(ranks)) {
    int n = static_cast<int>(rank_.size());
    by_rank_.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      int r = rank_[v];
      if (r < 1 || r > n || by_rank_[r - 1] != -1)
        throw InputError("ranks are not a permutation of 1..n");
      by_rank_[r - 1] = v;
    }
  }

  // Builds the order from a vertex sequence, first = rank 1.
  static LinearOrder from_sequence(const std::vector<Vertex>& seq) {
    std::vector<int> ranks(seq.size(), 0);
    for (size_t i = 0; i < seq.size(); ++i) {
      Vertex v = seq[i];
      if (v < 0 || v >= static_cast<int>(seq.size()) || ranks[v] != 0)
        throw InputError("sequence is not a permutation of the vertices");
      ranks[v] = static_cast<int>(i) + 1;
    }
    return LinearOrder(std::move(ranks));
  }

  static LinearOrder identity(int n) {
    std::vector<int> ranks(n);
    for (int v = 0; v < n; ++v) ranks[v] = v + 1;
    return LinearOrder(std::move(ranks));
  }

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(Vertex v) const { return rank_.at(v); }
  Vertex at_rank(int r) const { return by_rank_.at(r - 1); }
  bool less(Vertex u, Vertex v) const { return rank_[u] < rank_[v]; }

  const std::vector<int>& ranks() const { return rank_; }
  // Vertices listed from rank 1 to rank n.
  const std::vector<Vertex>& sequence() const { return by_rank_; }

 private:
  std::vector<int> rank_;
  std::vector<Vertex> by_rank_;
};

}  // namespace gencol
