#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/order.hpp"

namespace gencol {

// All randomness funnels through this wrapper: mt19937_64 (bit-identical on
// every platform) with rejection-sampled bounded draws and a Fisher-Yates
// shuffle, so seeded runs reproduce exactly everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound), rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  int uniform_int(int lo, int hi);  // inclusive range

  // true with probability num/den
  bool chance(std::uint64_t num, std::uint64_t den);

  LinearOrder random_order(int n);

  Graph random_graph(int n, std::uint64_t edge_num, std::uint64_t edge_den);

  // Random bipartite graph with sides a and b (vertices 0..a-1 / a..a+b-1).
  BipartiteGraph random_bipartite(int a, int b, std::uint64_t edge_num, std::uint64_t edge_den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace gencol
