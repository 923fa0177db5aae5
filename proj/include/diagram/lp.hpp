#pragma once

#include "diagram/rational.hpp"

namespace diagram::lp {

/// Outcome of the exact feasibility test for {y ≥ 0 : A·y = b}.
struct Feasibility {
  bool feasible = false;
  /// A nonnegative solution when feasible.
  RationalVector solution;
  /// Otherwise a Farkas certificate z with zᵀA ≥ 0 and zᵀb < 0.
  RationalVector certificate;
};

/// Phase-one simplex over Q with Bland's rule.
Feasibility nonnegative_solution(const Matrix& a, const RationalVector& b);

}  // namespace diagram::lp
