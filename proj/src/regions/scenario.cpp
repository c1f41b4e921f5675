#include "csbc/regions/scenario.hpp"

#include <algorithm>
#include <limits>

namespace csbc::regions {

namespace {

void expect_names(const std::vector<FiniteVariable>& vars, const std::vector<std::string>& names,
                  const std::string& what) {
  bool ok = vars.size() == names.size();
  for (std::size_t i = 0; ok && i < vars.size(); ++i) ok = vars[i].name == names[i];
  if (!ok) {
    std::string expected;
    for (const auto& n : names) expected += (expected.empty() ? "" : ",") + n;
    throw RegionError(what + " must be over (" + expected + ")");
  }
}

}  // namespace

void ScenarioSpec::validate() const {
  expect_names(source.variables(), {"S1", "S2"}, "source");
  expect_names(channel.given, {"X"}, "channel input");
  expect_names(channel.outcome, {"Y1", "Y2"}, "channel output");
  channel.validate();
}

void AuxiliarySpec::validate(const ScenarioSpec& scenario) const {
  expect_names(aux.given, {"S1", "S2"}, "auxiliary conditioning");
  expect_names(aux.outcome, {"U0", "U1", "U2"}, "auxiliary outcome");
  if (aux.given != scenario.source.variables()) throw RegionError("auxiliary source alphabets differ from the scenario");
  aux.validate();
  std::vector<FiniteVariable> inputs = aux.given;
  inputs.insert(inputs.end(), aux.outcome.begin(), aux.outcome.end());
  if (x_map.inputs != inputs) throw RegionError("x_map must be over (S1,S2,U0,U1,U2)");
  if (x_map.output != scenario.channel.given.at(0)) throw RegionError("x_map output must be the channel input X");
  x_map.validate();
}

RegionRow make_row(std::string name, double lhs, double rhs, double tol) {
  const double margin = rhs - lhs;
  return {std::move(name), lhs, rhs, margin, margin > tol};
}

bool RegionReport::all_satisfied() const {
  return std::all_of(rows.begin(), rows.end(), [](const RegionRow& r) { return r.satisfied; });
}

double RegionReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) m = std::min(m, r.margin);
  return m;
}

const RegionRow& RegionReport::at(std::string_view name) const {
  for (const auto& r : rows) {
    if (r.name == name) return r;
  }
  throw RegionError("no row named '" + std::string(name) + "'");
}

JointPmf make_source(std::size_t s1, std::size_t s2, std::vector<double> mass) {
  return JointPmf({{"S1", s1}, {"S2", s2}}, std::move(mass));
}

ConditionalPmf product_channel(const std::vector<std::vector<double>>& w1,
                               const std::vector<std::vector<double>>& w2) {
  if (w1.empty() || w1.size() != w2.size()) throw RegionError("channel components need the same input alphabet");
  const std::size_t nx = w1.size(), n1 = w1[0].size(), n2 = w2[0].size();
  ConditionalPmf ch{{{"X", nx}}, {{"Y1", n1}, {"Y2", n2}}, {}};
  ch.mass.reserve(nx * n1 * n2);
  for (std::size_t x = 0; x < nx; ++x) {
    if (w1[x].size() != n1 || w2[x].size() != n2) throw RegionError("ragged channel matrix");
    for (std::size_t a = 0; a < n1; ++a) {
      for (std::size_t b = 0; b < n2; ++b) ch.mass.push_back(w1[x][a] * w2[x][b]);
    }
  }
  ch.validate();
  return ch;
}

ConditionalPmf noiseless_channel(std::size_t x_size) {
  std::vector<std::vector<double>> id(x_size, std::vector<double>(x_size, 0.0));
  for (std::size_t x = 0; x < x_size; ++x) id[x][x] = 1.0;
  return product_channel(id, id);
}

AuxiliarySpec make_aux(std::size_t s1, std::size_t s2, std::size_t u0, std::size_t u1, std::size_t u2,
                       std::vector<double> mass, std::size_t x_size, std::vector<std::size_t> x_table) {
  std::vector<FiniteVariable> given{{"S1", s1}, {"S2", s2}};
  std::vector<FiniteVariable> outcome{{"U0", u0}, {"U1", u1}, {"U2", u2}};
  AuxiliarySpec spec{{given, outcome, std::move(mass)}, {}};
  spec.x_map.inputs = given;
  spec.x_map.inputs.insert(spec.x_map.inputs.end(), outcome.begin(), outcome.end());
  spec.x_map.output = {"X", x_size};
  spec.x_map.table = std::move(x_table);
  spec.aux.validate();
  spec.x_map.validate();
  return spec;
}

AuxiliarySpec source_independent_aux(std::size_t s1, std::size_t s2, std::size_t u0, std::size_t u1,
                                     std::size_t u2, const std::vector<double>& u_mass, std::size_t x_size,
                                     const std::vector<std::size_t>& x_table) {
  const std::size_t nu = u0 * u1 * u2;
  if (u_mass.size() != nu || x_table.size() != nu) throw RegionError("auxiliary table size mismatch");
  std::vector<double> mass;
  std::vector<std::size_t> table;
  for (std::size_t s = 0; s < s1 * s2; ++s) {
    mass.insert(mass.end(), u_mass.begin(), u_mass.end());
    table.insert(table.end(), x_table.begin(), x_table.end());
  }
  return make_aux(s1, s2, u0, u1, u2, std::move(mass), x_size, std::move(table));
}

AuxiliarySpec constant_aux(const ScenarioSpec& scenario, std::vector<std::size_t> x_table) {
  const std::size_t s1 = scenario.source.variable("S1").alphabet_size;
  const std::size_t s2 = scenario.source.variable("S2").alphabet_size;
  return make_aux(s1, s2, 1, 1, 1, std::vector<double>(s1 * s2, 1.0), scenario.x_size(), std::move(x_table));
}

JointPmf compose(const ScenarioSpec& scenario, const AuxiliarySpec& aux) {
  scenario.validate();
  aux.validate(scenario);
  return measures::compose_scenario(scenario.source, aux.aux, aux.x_map, scenario.channel);
}

AuxiliarySpec augment_with_w(const AuxiliarySpec& aux, std::size_t m) {
  if (m == 0) throw RegionError("W needs at least one symbol");
  const std::size_t s1 = aux.aux.given.at(0).alphabet_size, s2 = aux.aux.given.at(1).alphabet_size;
  const std::size_t u0 = aux.u_size(0), u1 = aux.u_size(1), u2 = aux.u_size(2);
  const std::size_t nu = u0 * u1 * u2, nv = nu * m * m * m;
  std::vector<double> mass(s1 * s2 * nv, 0.0);
  std::vector<std::size_t> table(s1 * s2 * nv, 0);
  for (std::size_t s = 0; s < s1 * s2; ++s) {
    for (std::size_t a = 0; a < u0 * m; ++a) {
      for (std::size_t b = 0; b < u1 * m; ++b) {
        for (std::size_t c = 0; c < u2 * m; ++c) {
          const std::size_t cell = s * nv + (a * u1 * m + b) * u2 * m + c;
          const std::size_t old = s * nu + (a / m * u1 + b / m) * u2 + c / m;
          table[cell] = aux.x_map.table[old];
          if (a % m == b % m && b % m == c % m) mass[cell] = aux.aux.mass[old] / static_cast<double>(m);
        }
      }
    }
  }
  return make_aux(s1, s2, u0 * m, u1 * m, u2 * m, std::move(mass), aux.x_map.output.alphabet_size,
                  std::move(table));
}

}  // namespace csbc::regions
