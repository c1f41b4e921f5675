#pragma once

#include <vector>

#include "csbc/rational.hpp"

namespace csbc::polytope {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/**
 * Linear program  minimize cost^T x  subject to rows, over exact rationals.
 *
 * Each row reads coeffs^T x <= rhs (or = rhs when `equality`). Variables
 * flagged in `nonneg` are constrained to x >= 0, the rest are free.
 */
struct LpProblem {
  struct Row {
    std::vector<Rational> coeffs;
    bool equality = false;
    Rational rhs;
  };

  std::size_t num_vars = 0;
  std::vector<bool> nonneg;
  std::vector<Row> rows;
  std::vector<Rational> cost;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
  /// Optimal: y with cost - A^T y >= 0 on nonneg columns, = 0 on free columns,
  /// y <= 0 on inequality rows; b^T y equals the optimum.
  std::vector<Rational> dual;
  /// Infeasible: y >= 0 on inequality rows with A^T y = 0 on free columns,
  /// A^T y >= 0 on nonneg columns and b^T y < 0.
  std::vector<Rational> farkas;
};

LpSolution solve_lp(const LpProblem& problem);

/**
 * Standard form  minimize c^T x  s.t.  A x = b, x >= 0  solved by a two-phase
 * tableau simplex (Dantzig pricing, lexicographic ratio test).
 * Dual / Farkas vectors follow the conventions of LpSolution with every row
 * an equality.
 */
LpSolution solve_standard_form(const std::vector<std::vector<Rational>>& a,
                               const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace csbc::polytope
