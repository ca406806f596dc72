#pragma once

#include <cstddef>
#include <span>

#include "ssetkit/linalg.hpp"

namespace ssetkit {

enum class LpStatus { optimal, infeasible, unbounded };

/**
 * Result of an exact linear program in standard form
 *
 *     maximize c.x  subject to  A x = b,  x >= 0.
 *
 * On `optimal`, `primal` is an optimal basic solution and `dual` a vector y
 * with A^T y >= c and b.y == objective (strong duality, exact).
 */
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational objective;
  RationalVector primal;
  RationalVector dual;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's rule.
LpSolution maximize(const RationalMatrix& a, std::span<const Rational> b, std::span<const Rational> c);

}  // namespace ssetkit
