#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csbc/measures/measures.hpp"

namespace csbc::regions {

using measures::ConditionalPmf;
using measures::DeterministicMap;
using measures::FiniteVariable;
using measures::InfoExpression;
using measures::JointPmf;

class RegionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A row is satisfied when rhs - lhs exceeds this.
inline constexpr double kStrictTol = 1e-9;

/// Source p(s1,s2) over variables named S1, S2 and channel p(y1,y2|x).
struct ScenarioSpec {
  JointPmf source;
  ConditionalPmf channel;

  /// Throws RegionError unless the variables are named S1,S2 / X / Y1,Y2.
  void validate() const;
  std::size_t x_size() const { return channel.given.at(0).alphabet_size; }
};

/// p(u0,u1,u2|s1,s2) and the deterministic encoder map x(s1,s2,u0,u1,u2).
struct AuxiliarySpec {
  ConditionalPmf aux;
  DeterministicMap x_map;

  void validate(const ScenarioSpec& scenario) const;
  std::size_t u_size(std::size_t i) const { return aux.outcome.at(i).alphabet_size; }
};

struct RateTriple {
  double r0 = 0;
  double r1 = 0;
  double r2 = 0;

  friend bool operator==(const RateTriple&, const RateTriple&) = default;
};

/// One inequality "lhs < rhs" evaluated numerically.
struct RegionRow {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  bool satisfied = false;
};

RegionRow make_row(std::string name, double lhs, double rhs, double tol = kStrictTol);

struct RegionReport {
  std::vector<RegionRow> rows;

  bool all_satisfied() const;
  double min_margin() const;
  /// Throws RegionError for unknown names.
  const RegionRow& at(std::string_view name) const;
};

/// Source over S1, S2 with the given alphabet sizes, row-major over (s1, s2).
JointPmf make_source(std::size_t s1, std::size_t s2, std::vector<double> mass);

/// p(y1,y2|x) = w1[x][y1] * w2[x][y2].
ConditionalPmf product_channel(const std::vector<std::vector<double>>& w1,
                               const std::vector<std::vector<double>>& w2);

/// Y1 = Y2 = X.
ConditionalPmf noiseless_channel(std::size_t x_size);

/// `mass` is row-major over (s1,s2,u0,u1,u2), `x_table` over (s1,s2,u0,u1,u2).
AuxiliarySpec make_aux(std::size_t s1, std::size_t s2, std::size_t u0, std::size_t u1, std::size_t u2,
                       std::vector<double> mass, std::size_t x_size, std::vector<std::size_t> x_table);

/// Auxiliaries independent of the source: p(u0,u1,u2) replicated for every (s1,s2).
/// `x_table` is over (u0,u1,u2) only.
AuxiliarySpec source_independent_aux(std::size_t s1, std::size_t s2, std::size_t u0, std::size_t u1,
                                     std::size_t u2, const std::vector<double>& u_mass, std::size_t x_size,
                                     const std::vector<std::size_t>& x_table);

/// All auxiliaries constant; x = x_table[(s1,s2)].
AuxiliarySpec constant_aux(const ScenarioSpec& scenario, std::vector<std::size_t> x_table);

/// Joint pmf over (S1,S2,U0,U1,U2,X,Y1,Y2).
JointPmf compose(const ScenarioSpec& scenario, const AuxiliarySpec& aux);

/**
 * Replaces each U_i by (U_i, W) with one W uniform on m symbols, independent
 * of everything else. The new symbol of U_i is u_i * m + w; x ignores w.
 */
AuxiliarySpec augment_with_w(const AuxiliarySpec& aux, std::size_t m);

}  // namespace csbc::regions
