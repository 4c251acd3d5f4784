#pragma once

#include <cstdint>

#include "gencol/errors.hpp"
#include "gencol/exact.hpp"
#include "gencol/graph.hpp"
#include "gencol/rational.hpp"

namespace gencol {

inline constexpr int kTgradSizeCap = 12;

// Budget exhaustion during the density search; carries the best density
// established so far.
class TgradBudgetError : public ResourceError {
 public:
  TgradBudgetError(const std::string& what, Rational best)
      : ResourceError(what, best.num() / best.den(), best.num() / best.den() + 1),
        best_density(best) {}
  Rational best_density;
};

// Topological greatest reduced average density at rank r: the maximum edge
// density over all H whose (<= 2r)-subdivision embeds in g. Found by
// enumerating branch-vertex sets and packing internally disjoint paths of
// length at most 2r+1 between them. Graphs above the size cap are rejected
// unless the node budget is raised explicitly.
Rational top_grad_bruteforce(const Graph& g, int r, ExactBudget budget = {});

struct AdmBoundReport {
  int adm = 0;
  Rational grad;           // topological grad at rank r-1
  Rational bound;          // 6 r max(grad, 1)^3
  Rational literal_bound;  // 6 r grad^3, false on sub-unit densities
  Rational slack;          // bound - adm
  bool holds = false;
  bool literal_holds = false;
};

// Both sides of the admissibility-vs-expansion inequality, compared exactly.
// The certified bound clamps the density at 1: the inequality's derivation
// needs densities of at least one (a single edge already violates the
// unclamped form), so grad enters the cube only from 1 upward. The literal
// unclamped comparison is reported alongside.
AdmBoundReport check_adm_bound(const Graph& g, int r, ExactBudget budget = {});

}  // namespace gencol
