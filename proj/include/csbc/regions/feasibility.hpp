#pragma once

#include <map>
#include <string>
#include <vector>

#include "csbc/polytope/lin_system.hpp"
#include "csbc/regions/scenario.hpp"

namespace csbc::regions {

using polytope::LinIneq;
using polytope::LinSystem;

/**
 * Rate system over H1, H2, R0, R1, R2, v1..v11 where v_k name the bound
 * expressions of the covering and decoding conditions:
 *   R0 > v1, R1 > v2, R2 > v3, R0+R1 > v4, R0+R2 > v5, R1+R2 > v6,
 *   R0+R1+R2 > v7, H1+R1 < v8, H1+R0+R1 < v9, H2+R2 < v10, H2+R0+R2 < v11.
 */
LinSystem rate_system();

/// Shannon-type relations among v1..v11 (all >= 0 forms).
LinSystem v_relations();

/// The eight rows left after eliminating R0, R1, R2 and pruning.
LinSystem expected_fm_system();
/// Same rows in display order.
std::vector<std::string> expected_fm_text();

/// Whether two systems imply each other (closed relaxation, strictness compared separately).
bool equivalent_systems(const LinSystem& a, const LinSystem& b);

struct FmReport {
  std::vector<std::string> order;
  bool with_relations = true;
  /// After elimination, before pruning.
  LinSystem raw;
  LinSystem reduced;
  /// Reduced rows that mention H1 or H2.
  LinSystem h_rows;
  std::vector<LinIneq> missing;
  std::vector<LinIneq> extra;
  /// h_rows equals the expected system.
  bool matches = false;
  /// raw plus v_relations implies and is implied by expected plus v_relations.
  bool equivalent = false;
};

FmReport run_fm_pipeline(bool with_relations = true,
                         const std::vector<std::string>& order = {"R0", "R1", "R2"});

struct RateFeasibility {
  bool feasible = false;
  RateTriple witness;
  /// Exact witness (rationals as "p/q" text), keyed R0, R1, R2.
  std::map<std::string, std::string> exact_witness;
  std::vector<Rational> certificate;
};

/**
 * Exact feasibility of the rate system with H1, H2, v1..v11 fixed. Every
 * double is converted to the rational it represents exactly.
 */
RateFeasibility rate_region_feasible(const std::vector<double>& covering, const std::vector<double>& decoding,
                                     double h1, double h2);

/// Conjunction of the expected rows evaluated exactly at (h1, h2, v).
bool fm_rows_hold(double h1, double h2, const std::map<std::string, double>& v);

}  // namespace csbc::regions
