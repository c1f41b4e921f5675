#pragma once

#include <map>
#include <string>
#include <vector>

#include "csbc/regions/scenario.hpp"

namespace csbc::regions {

/// Symbolic row "lhs < rhs" over the composed variables (plus K where used).
struct BoundSpec {
  std::string name;
  InfoExpression lhs;
  InfoExpression rhs;
};

/// Rows single1, single2, km1, km2, km3.
std::vector<BoundSpec> theorem2_bounds();
/// Rows single1, single2, hc1, hc2, hc3; K is the common part of (S1,S2).
std::vector<BoundSpec> theorem1_hc_bounds();
/// The eight rows fm1..fm8 in terms of H(S1), H(S2) and v1..v11 (expanded).
std::vector<BoundSpec> fm_bounds();
/// Names of the three fm rows that W-augmentation makes inactive.
const std::vector<std::string>& discarded_fm_rows();

RegionReport evaluate_bounds(const std::vector<BoundSpec>& bounds, const JointPmf& pmf, double tol = kStrictTol);

/// Replaces U0, U1, U2 by (U0,W), (U1,W), (U2,W) in every row.
std::vector<BoundSpec> substitute_w(const std::vector<BoundSpec>& bounds, const std::string& w = "W");

RegionReport eval_theorem2(const ScenarioSpec& scenario, const AuxiliarySpec& aux);

/// Composed pmf with K = f(S1) appended as the last variable.
JointPmf compose_with_common_part(const ScenarioSpec& scenario, const AuxiliarySpec& aux);
RegionReport eval_theorem1_hc(const ScenarioSpec& scenario, const AuxiliarySpec& aux);

struct RowComparison {
  std::string name;
  double thm2_rhs = 0;
  double hc_rhs = 0;
  /// hc_rhs >= thm2_rhs - 1e-10.
  bool dominates = false;
};

std::vector<RowComparison> compare_thm2_hc(const ScenarioSpec& scenario, const AuxiliarySpec& aux);

/// A one-sided rate bound; `lhs` is display text such as "R0 + R1" or "H(S1) + R1".
struct NamedBound {
  std::string name;
  std::string lhs;
  InfoExpression expr;
};

struct BoundValue {
  std::string name;
  std::string lhs;
  double value = 0;
};

/// cov1..cov7: lower bounds on R0, R1, R2, R0+R1, R0+R2, R1+R2, R0+R1+R2.
std::vector<NamedBound> covering_bounds();
/// dec1..dec4: upper bounds on H(S1)+R1, H(S1)+R0+R1, H(S2)+R2, H(S2)+R0+R2.
std::vector<NamedBound> decoding_bounds();
/// covb1..covb4: lower bounds on R0, R0+R1, R0+R2, R0+R1+R2.
std::vector<NamedBound> superposition_covering_bounds();
/// dec1b, dec2b, dec3b.1, dec3b.2.
std::vector<NamedBound> superposition_decoding_bounds();

std::vector<BoundValue> evaluate_named(const std::vector<NamedBound>& bounds, const JointPmf& pmf);

std::vector<BoundValue> eval_covering_rates(const ScenarioSpec& scenario, const AuxiliarySpec& aux);
std::vector<BoundValue> eval_decoding_rates(const ScenarioSpec& scenario, const AuxiliarySpec& aux);

struct SuperpositionBounds {
  std::vector<BoundValue> covering;
  std::vector<BoundValue> decoding;
};

SuperpositionBounds eval_superposition_rates(const ScenarioSpec& scenario, const AuxiliarySpec& aux);

/// ceil(2^(d + 1)) for the largest deficit d = lhs - rhs over the discarded fm rows; at least 1.
std::size_t bridging_w_size(const RegionReport& fm_report);

/// v1..v11 evaluated on a composed pmf.
std::map<std::string, double> v_values(const JointPmf& pmf);

}  // namespace csbc::regions
