#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "csbc/rational.hpp"

namespace csbc::polytope {

class PolytopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Relation { LessEqual, Less, Equal };

/// Point in named-variable space; absent names read as zero.
using Point = std::map<std::string, Rational>;

/**
 * One row sum_k a_k x_k (<=, <, =) b in canonical form.
 *
 * Canonical form: coefficients and constant scaled to coprime integers by a
 * positive factor; equalities additionally have their first nonzero
 * coefficient (variable-name order) positive; rows without coefficients are
 * reduced to a constant in {-1, 0, 1}. Zero coefficients are never stored.
 */
class LinIneq {
 public:
  LinIneq(std::map<std::string, Rational> coefficients, Relation relation, Rational constant);

  const std::map<std::string, Rational>& coefficients() const { return coefficients_; }
  Relation relation() const { return relation_; }
  const Rational& constant() const { return constant_; }
  bool is_strict() const { return relation_ == Relation::Less; }

  Rational coefficient(const std::string& name) const;
  bool mentions(const std::string& name) const { return coefficients_.count(name) != 0; }

  /// Row without coefficients that every point satisfies (e.g. 0 <= 1).
  bool is_tautology() const;
  /// Row without coefficients that no point satisfies (e.g. 0 < 0).
  bool is_contradiction() const;

  Rational lhs_value(const Point& point) const;
  bool satisfied_by(const Point& point) const;

  /// "3*v1 - 2*v2 + r0 <= 5"
  std::string to_string() const;

  friend bool operator==(const LinIneq&, const LinIneq&) = default;
  friend bool operator<(const LinIneq& a, const LinIneq& b);

 private:
  std::map<std::string, Rational> coefficients_;
  Relation relation_;
  Rational constant_;
};

/// a + factor * b, computed on raw rows and re-canonicalized; relation supplied by the caller.
LinIneq combine(const LinIneq& a, const Rational& factor_a, const LinIneq& b,
                const Rational& factor_b, Relation relation);

/**
 * Set of canonical rows over a declared variable list.
 *
 * Rows are kept sorted and duplicate-free; tautologies are dropped on insert.
 * Every row may only mention declared variables.
 */
class LinSystem {
 public:
  LinSystem() = default;
  LinSystem(std::vector<std::string> variables, std::vector<LinIneq> rows = {});

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<LinIneq>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool has_variable(const std::string& name) const;

  /// Inserts a row (no-op for duplicates and tautologies).
  void add(const LinIneq& row);
  void add_variable(const std::string& name);

  bool satisfied_by(const Point& point) const;
  /// Union of rows and variables.
  LinSystem merged_with(const LinSystem& other) const;

  friend bool operator==(const LinSystem&, const LinSystem&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<LinIneq> rows_;
};

}  // namespace csbc::polytope
