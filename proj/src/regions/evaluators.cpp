#include "csbc/regions/evaluators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "csbc/itp/prover.hpp"

namespace csbc::regions {

namespace {

using measures::VarSet;

InfoExpression H(const VarSet& a, const VarSet& given = {}) { return InfoExpression::entropy(a, given); }

InfoExpression I(const VarSet& a, const VarSet& b, const VarSet& given = {}) {
  return InfoExpression::mutual_information(a, b, given);
}

}  // namespace

std::vector<BoundSpec> theorem2_bounds() {
  const auto cross = I({"U1", "S1"}, {"U2", "S2"}, {"U0"});
  return {
      {"single1", H({"S1"}), I({"U0", "U1", "S1"}, {"Y1"}) - I({"U0", "U1"}, {"S2"}, {"S1"})},
      {"single2", H({"S2"}), I({"U0", "U2", "S2"}, {"Y2"}) - I({"U0", "U2"}, {"S1"}, {"S2"})},
      {"km1", H({"S1", "S2"}), I({"U0", "U1", "S1"}, {"Y1"}) + I({"U2", "S2"}, {"Y2"}, {"U0"}) - cross},
      {"km2", H({"S1", "S2"}), I({"U1", "S1"}, {"Y1"}, {"U0"}) + I({"U0", "U2", "S2"}, {"Y2"}) - cross},
      {"km3", H({"S1", "S2"}),
       I({"U0", "U1", "S1"}, {"Y1"}) + I({"U0", "U2", "S2"}, {"Y2"}) - cross - I({"S1", "S2"}, {"U0"})},
  };
}

std::vector<BoundSpec> theorem1_hc_bounds() {
  const auto cross = I({"U1", "S1"}, {"U2", "S2"}, {"K", "U0"});
  auto rows = theorem2_bounds();
  rows[2] = {"hc1", H({"S1", "S2"}), I({"K", "U0", "U1", "S1"}, {"Y1"}) + I({"U2", "S2"}, {"Y2"}, {"K", "U0"}) - cross};
  rows[3] = {"hc2", H({"S1", "S2"}), I({"U1", "S1"}, {"Y1"}, {"K", "U0"}) + I({"K", "U0", "U2", "S2"}, {"Y2"}) - cross};
  rows[4] = {"hc3", H({"S1", "S2"}),
             I({"U0", "U1", "S1"}, {"Y1"}) + I({"U0", "U2", "S2"}, {"Y2"}) - cross - I({"S1", "S2"}, {"K", "U0"})};
  return rows;
}

std::vector<BoundSpec> fm_bounds() {
  auto v = itp::v_definitions();
  const auto h1 = H({"S1"}), h2 = H({"S2"});
  return {
      {"fm1", h1, v["v9"] - v["v4"]},
      {"fm2", h1, v["v8"] - v["v2"]},
      {"fm3", h2, v["v11"] - v["v5"]},
      {"fm4", h2, v["v10"] - v["v3"]},
      {"fm5", h1 + h2, v["v9"] + v["v10"] - v["v7"]},
      {"fm6", h1 + h2, v["v8"] + v["v11"] - v["v7"]},
      {"fm7", h1 + h2, v["v8"] + v["v10"] - v["v6"]},
      {"fm8", h1 + h2, v["v9"] + v["v11"] - v["v7"] - v["v1"]},
  };
}

const std::vector<std::string>& discarded_fm_rows() {
  static const std::vector<std::string> names{"fm2", "fm4", "fm7"};
  return names;
}

RegionReport evaluate_bounds(const std::vector<BoundSpec>& bounds, const JointPmf& pmf, double tol) {
  measures::EntropyTable table(pmf);
  RegionReport report;
  for (const auto& b : bounds) report.rows.push_back(make_row(b.name, table.eval(b.lhs), table.eval(b.rhs), tol));
  return report;
}

std::vector<BoundSpec> substitute_w(const std::vector<BoundSpec>& bounds, const std::string& w) {
  const std::map<std::string, VarSet> groups{{"U0", {"U0", w}}, {"U1", {"U1", w}}, {"U2", {"U2", w}}};
  std::vector<BoundSpec> out;
  for (const auto& b : bounds) out.push_back({b.name, b.lhs.substitute(groups), b.rhs.substitute(groups)});
  return out;
}

RegionReport eval_theorem2(const ScenarioSpec& scenario, const AuxiliarySpec& aux) {
  return evaluate_bounds(theorem2_bounds(), compose(scenario, aux));
}

JointPmf compose_with_common_part(const ScenarioSpec& scenario, const AuxiliarySpec& aux) {
  const auto pmf = compose(scenario, aux);
  const auto cp = measures::common_part(scenario.source);
  const auto& s1 = scenario.source.variable("S1");
  DeterministicMap k{{s1}, {"K", cp.size}, {}};
  // Zero-probability S1 symbols get an arbitrary class; they carry no mass.
  for (const auto& label : cp.f) k.table.push_back(label.value_or(0));
  return measures::append_function(pmf, k);
}

RegionReport eval_theorem1_hc(const ScenarioSpec& scenario, const AuxiliarySpec& aux) {
  return evaluate_bounds(theorem1_hc_bounds(), compose_with_common_part(scenario, aux));
}

std::vector<RowComparison> compare_thm2_hc(const ScenarioSpec& scenario, const AuxiliarySpec& aux) {
  const auto pmf = compose_with_common_part(scenario, aux);
  const auto thm2 = evaluate_bounds(theorem2_bounds(), pmf);
  const auto hc = evaluate_bounds(theorem1_hc_bounds(), pmf);
  std::vector<RowComparison> out;
  for (std::size_t i = 0; i < thm2.rows.size(); ++i) {
    const double a = thm2.rows[i].rhs, b = hc.rows[i].rhs;
    out.push_back({thm2.rows[i].name + "/" + hc.rows[i].name, a, b, b >= a - 1e-10});
  }
  return out;
}

std::vector<NamedBound> covering_bounds() {
  auto v = itp::v_definitions();
  return {
      {"cov1", "R0", v["v1"]},      {"cov2", "R1", v["v2"]},           {"cov3", "R2", v["v3"]},
      {"cov4", "R0 + R1", v["v4"]}, {"cov5", "R0 + R2", v["v5"]},      {"cov6", "R1 + R2", v["v6"]},
      {"cov7", "R0 + R1 + R2", v["v7"]},
  };
}

std::vector<NamedBound> decoding_bounds() {
  auto v = itp::v_definitions();
  return {
      {"dec1", "H(S1) + R1", v["v8"]},
      {"dec2", "H(S1) + R0 + R1", v["v9"]},
      {"dec3", "H(S2) + R2", v["v10"]},
      {"dec4", "H(S2) + R0 + R2", v["v11"]},
  };
}

std::vector<NamedBound> superposition_covering_bounds() {
  const auto base = I({"U0"}, {"S1", "S2"});
  const auto one = I({"S2"}, {"U1"}, {"S1", "U0"});
  return {
      {"covb1", "R0", base},
      {"covb2", "R0 + R1", base + one},
      {"covb3", "R0 + R2", base + I({"S1"}, {"U2"}, {"S2", "U0"})},
      {"covb4", "R0 + R1 + R2", base + one + I({"S1", "U1"}, {"U2"}, {"S2", "U0"})},
  };
}

std::vector<NamedBound> superposition_decoding_bounds() {
  return {
      {"dec1b", "H(S1) + R1", I({"U1", "S1"}, {"Y1"}, {"U0"}) + I({"S1"}, {"U0"})},
      {"dec2b", "H(S1) + R0 + R1", I({"U0", "U1", "S1"}, {"Y1"}) + I({"U0"}, {"S1"})},
      {"dec3b.1", "H(S2) + R2", I({"U2", "S2"}, {"Y2"}, {"U0"}) + I({"S2"}, {"U0"})},
      {"dec3b.2", "H(S2) + R0 + R2", I({"U0", "U2", "S2"}, {"Y2"}) + I({"U0"}, {"S2"})},
  };
}

std::vector<BoundValue> evaluate_named(const std::vector<NamedBound>& bounds, const JointPmf& pmf) {
  measures::EntropyTable table(pmf);
  std::vector<BoundValue> out;
  for (const auto& b : bounds) out.push_back({b.name, b.lhs, table.eval(b.expr)});
  return out;
}

std::vector<BoundValue> eval_covering_rates(const ScenarioSpec& scenario, const AuxiliarySpec& aux) {
  return evaluate_named(covering_bounds(), compose(scenario, aux));
}

std::vector<BoundValue> eval_decoding_rates(const ScenarioSpec& scenario, const AuxiliarySpec& aux) {
  return evaluate_named(decoding_bounds(), compose(scenario, aux));
}

SuperpositionBounds eval_superposition_rates(const ScenarioSpec& scenario, const AuxiliarySpec& aux) {
  const auto pmf = compose(scenario, aux);
  return {evaluate_named(superposition_covering_bounds(), pmf),
          evaluate_named(superposition_decoding_bounds(), pmf)};
}

std::size_t bridging_w_size(const RegionReport& fm_report) {
  double deficit = -std::numeric_limits<double>::infinity();
  for (const auto& name : discarded_fm_rows()) deficit = std::max(deficit, -fm_report.at(name).margin);
  const double m = std::ceil(std::exp2(deficit + 1));
  return m < 1 ? 1 : static_cast<std::size_t>(m);
}

std::map<std::string, double> v_values(const JointPmf& pmf) {
  measures::EntropyTable table(pmf);
  std::map<std::string, double> out;
  for (const auto& [name, expr] : itp::v_definitions()) out[name] = table.eval(expr);
  return out;
}

}  // namespace csbc::regions
