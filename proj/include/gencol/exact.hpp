#pragma once

#include <cstdint>
#include <vector>

#include "gencol/graph.hpp"
#include "gencol/order.hpp"

namespace gencol {

// Search budget for the exact solvers. A default-constructed budget keeps
// the desk-scale guard: graphs above the size cap are rejected unless the
// caller raises the node limit explicitly.
struct ExactBudget {
  std::uint64_t node_limit = 0;  // 0 = default limit with the size cap enforced
};

inline constexpr int kExactSizeCap = 11;
inline constexpr std::uint64_t kDefaultNodeLimit = 50'000'000;

struct ExactResult {
  int value = 0;
  LinearOrder witness;
  std::uint64_t nodes = 0;
};

// Exact minimum over all linear orders, by branch-and-bound over order
// prefixes. Placing vertices smallest rank first fixes the final reach
// count of each placed vertex at placement time, which yields admissible
// pruning; a forced-count bound on the unplaced vertices and a dominance
// rule for order-independent adjacent placements cut the rest.
// Throws ResourceError with the best bounds when the node budget runs out.
ExactResult wcol_exact(const Graph& g, int r, ExactBudget budget = {});
ExactResult col_exact(const Graph& g, int r, ExactBudget budget = {});
ExactResult adm_exact(const Graph& g, int r, ExactBudget budget = {});

// Minimum d such that every subgraph has a vertex of degree <= d.
int degeneracy(const Graph& g);

struct EliminationResult {
  int width = 0;
  std::vector<Vertex> elimination;  // first-eliminated first
  std::uint64_t nodes = 0;
};

// Exact treewidth via search over elimination orders (eliminate a vertex,
// make a clique of its neighbours), memoised on the eliminated set.
EliminationResult treewidth_small(const Graph& g, ExactBudget budget = {});

// Exact treedepth by recursive root removal over induced subgraphs.
int treedepth_small(const Graph& g, ExactBudget budget = {});

// True iff a K_{k,k} exists across the given bipartition.
bool biclique_bruteforce(const BipartiteGraph& bg, int k);

// Diagnostic for the convention-sensitive inequality
// col_r <= (adm_r - 1)(adm_r - 2)^{r-1} + 1: reports, never asserts.
struct ChainDiagnostic {
  int adm = 0;
  int col = 0;
  long long rhs = 0;
  bool holds = false;
};
ChainDiagnostic chain_diagnostic(const Graph& g, int r, ExactBudget budget = {});

}  // namespace gencol
