#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csbc/polytope/lin_system.hpp"

namespace csbc::polytope {

/**
 * Projects out one variable.
 *
 * If an equality mentions `var`, it is solved for `var` and substituted into
 * every other row. Otherwise each row with a positive coefficient is paired
 * with each row with a negative coefficient; a pair is strict if either side
 * is strict. The result never mentions `var` and describes the exact
 * projection of the solution set.
 */
LinSystem fm_eliminate(const LinSystem& system, const std::string& var);

/// Sequential fm_eliminate; rows are deduplicated after every step.
LinSystem eliminate_all(const LinSystem& system, const std::vector<std::string>& order);

/**
 * Drops rows implied by the remaining ones, one at a time in row order.
 *
 * Implication is decided by exact LP on the closed relaxation (strict rows
 * read as non-strict): row a.x <= b is implied when max a.x over the other
 * rows is at most b. Equalities are never removed.
 */
LinSystem remove_redundant(const LinSystem& system);

/// Whether `row` is implied by `system` on the closed relaxation.
bool implies(const LinSystem& system, const LinIneq& row);

struct FeasibilityResult {
  bool feasible = false;
  /// Point satisfying every row (strict rows strictly) when feasible.
  Point witness;
  /**
   * When infeasible: one multiplier per row of the system (>= 0 on
   * inequalities) with sum z_i a_i = 0 and either sum z_i b_i < 0, or
   * sum z_i b_i = 0 with z_i > 0 on some strict row.
   */
  std::vector<Rational> certificate;
};

/// Exact feasibility; strictness is confirmed by maximizing a slack t <= 1 shared by strict rows.
FeasibilityResult is_feasible(const LinSystem& system);

/// Checks an infeasibility certificate as documented on FeasibilityResult.
bool verify_infeasibility_certificate(const LinSystem& system,
                                      const std::vector<Rational>& certificate);

}  // namespace csbc::polytope
