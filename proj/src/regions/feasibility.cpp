#include "csbc/regions/feasibility.hpp"

#include <algorithm>

#include "csbc/polytope/fourier_motzkin.hpp"
#include "csbc/polytope/system_text.hpp"

namespace csbc::regions {

namespace {

constexpr const char* kRateSystem = R"(
R0 > v1
R1 > v2
R2 > v3
R0 + R1 > v4
R0 + R2 > v5
R1 + R2 > v6
R0 + R1 + R2 > v7
H1 + R1 < v8
H1 + R0 + R1 < v9
H2 + R2 < v10
H2 + R0 + R2 < v11
)";

constexpr const char* kRelations = R"(
v1 >= 0
v2 >= 0
v3 >= 0
v1 + v2 <= v4
v1 + v3 <= v5
v2 + v3 <= v6
v4 + v6 <= v2 + v7
v4 + v5 <= v1 + v7
v5 + v6 <= v3 + v7
v8 <= v9
v10 <= v11
)";

const std::vector<std::string> kExpected{
    "H1 < v9 - v4",
    "H1 < v8 - v2",
    "H2 < v11 - v5",
    "H2 < v10 - v3",
    "H1 + H2 < v9 + v10 - v7",
    "H1 + H2 < v8 + v11 - v7",
    "H1 + H2 < v8 + v10 - v6",
    "H1 + H2 < v9 + v11 - v7 - v1",
};

const std::vector<std::string>& all_variables() {
  static const std::vector<std::string> vars = [] {
    std::vector<std::string> v{"H1", "H2", "R0", "R1", "R2"};
    for (int k = 1; k <= 11; ++k) v.push_back("v" + std::to_string(k));
    return v;
  }();
  return vars;
}

LinSystem with_all_variables(const LinSystem& s) {
  return LinSystem(all_variables(), s.rows());
}

bool mentions_h(const LinIneq& row) { return row.mentions("H1") || row.mentions("H2"); }

}  // namespace

LinSystem rate_system() { return with_all_variables(polytope::parse_system(kRateSystem)); }

LinSystem v_relations() { return with_all_variables(polytope::parse_system(kRelations)); }

std::vector<std::string> expected_fm_text() { return kExpected; }

LinSystem expected_fm_system() {
  std::vector<LinIneq> rows;
  for (const auto& line : kExpected) rows.push_back(polytope::parse_inequality(line));
  return LinSystem(all_variables(), std::move(rows));
}

bool equivalent_systems(const LinSystem& a, const LinSystem& b) {
  for (const auto& r : b.rows()) {
    if (!polytope::implies(a, r)) return false;
  }
  for (const auto& r : a.rows()) {
    if (!polytope::implies(b, r)) return false;
  }
  return true;
}

FmReport run_fm_pipeline(bool with_relations, const std::vector<std::string>& order) {
  auto sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<std::string>{"R0", "R1", "R2"}) {
    throw RegionError("elimination order must be a permutation of R0, R1, R2");
  }
  FmReport report;
  report.order = order;
  report.with_relations = with_relations;
  LinSystem start = with_relations ? rate_system().merged_with(v_relations()) : rate_system();
  report.raw = polytope::eliminate_all(start, order);
  report.reduced = polytope::remove_redundant(report.raw);
  std::vector<LinIneq> h;
  for (const auto& r : report.reduced.rows()) {
    if (mentions_h(r)) h.push_back(r);
  }
  report.h_rows = LinSystem(all_variables(), h);
  const auto expected = expected_fm_system();
  for (const auto& r : expected.rows()) {
    if (!std::binary_search(report.h_rows.rows().begin(), report.h_rows.rows().end(), r)) report.missing.push_back(r);
  }
  for (const auto& r : report.h_rows.rows()) {
    if (!std::binary_search(expected.rows().begin(), expected.rows().end(), r)) report.extra.push_back(r);
  }
  report.matches = report.missing.empty() && report.extra.empty();
  const auto rel = v_relations();
  bool strict_ok = true;
  for (const auto& r : report.raw.rows()) strict_ok = strict_ok && (!mentions_h(r) || r.is_strict());
  report.equivalent =
      strict_ok && equivalent_systems(report.raw.merged_with(rel), expected.merged_with(rel));
  return report;
}

RateFeasibility rate_region_feasible(const std::vector<double>& covering, const std::vector<double>& decoding,
                                     double h1, double h2) {
  if (covering.size() != 7 || decoding.size() != 4) throw RegionError("expected 7 covering and 4 decoding bounds");
  polytope::Point fixed{{"H1", exact_rational(h1)}, {"H2", exact_rational(h2)}};
  for (std::size_t k = 0; k < 7; ++k) fixed["v" + std::to_string(k + 1)] = exact_rational(covering[k]);
  for (std::size_t k = 0; k < 4; ++k) fixed["v" + std::to_string(k + 8)] = exact_rational(decoding[k]);
  std::vector<LinIneq> rows;
  const auto full = rate_system();
  for (const auto& r : full.rows()) {
    std::map<std::string, Rational> coeffs;
    Rational constant = r.constant();
    for (const auto& [name, c] : r.coefficients()) {
      if (auto it = fixed.find(name); it != fixed.end()) {
        constant -= c * it->second;
      } else {
        coeffs[name] = c;
      }
    }
    rows.emplace_back(std::move(coeffs), r.relation(), std::move(constant));
  }
  const LinSystem system({"R0", "R1", "R2"}, std::move(rows));
  const auto result = polytope::is_feasible(system);
  RateFeasibility out;
  out.feasible = result.feasible;
  out.certificate = result.certificate;
  if (result.feasible) {
    auto get = [&](const char* n) {
      auto it = result.witness.find(n);
      return it == result.witness.end() ? Rational(0) : it->second;
    };
    out.witness = {get("R0").convert_to<double>(), get("R1").convert_to<double>(), get("R2").convert_to<double>()};
    for (const char* n : {"R0", "R1", "R2"}) out.exact_witness[n] = csbc::to_string(get(n));
  }
  return out;
}

bool fm_rows_hold(double h1, double h2, const std::map<std::string, double>& v) {
  polytope::Point p{{"H1", exact_rational(h1)}, {"H2", exact_rational(h2)}};
  for (const auto& [name, value] : v) p[name] = exact_rational(value);
  return expected_fm_system().satisfied_by(p);
}

}  // namespace csbc::regions
