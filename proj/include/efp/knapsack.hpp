#pragma once

#include <vector>

#include "efp/rational.hpp"

namespace efp {

struct KnapsackItem {
  long long weight = 0;
  Rat value;
};

/// One choice class. When `required` is false the class implicitly contains
/// the (0, 0) item, so choosing nothing is always feasible; required classes
/// must contribute exactly one of their listed items.
struct KnapsackClass {
  std::vector<KnapsackItem> items;
  bool required = false;
};

struct KnapsackInstance {
  std::vector<KnapsackClass> classes;
  long long capacity = 0;
};

struct KnapsackSolution {
  bool feasible = false;
  Rat value;
  long long weight = 0;
  std::vector<int> choice;  // item index per class, -1 = nothing
};

/// Exact dynamic program over capacity. Infeasible only when a required
/// class cannot fit.
KnapsackSolution multichoice_knapsack_exact(const KnapsackInstance& kp);

/// Value-scaling FPTAS: returns a feasible selection with total value at
/// least (1 - eps) times the exact optimum. Throws InvalidEpsilon unless
/// eps is in (0, 1).
KnapsackSolution multichoice_knapsack_fptas(const KnapsackInstance& kp,
                                            const Rat& eps);

}  // namespace efp
