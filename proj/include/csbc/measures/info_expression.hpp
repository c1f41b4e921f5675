#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "csbc/rational.hpp"

namespace csbc::measures {

/// Sorted, duplicate-free list of variable names.
using VarSet = std::vector<std::string>;

/// Sorts and deduplicates a name list.
VarSet make_varset(VarSet names);
VarSet varset_union(const VarSet& a, const VarSet& b);

/**
 * Linear combination of joint entropies, sum_k c_k * H(subset_k), in bits.
 *
 * The representation is canonical: subsets are sorted, each subset appears at
 * most once, no coefficient is zero and the empty subset (H = 0) is never
 * stored. Two expressions denote the same functional iff they compare equal.
 */
class InfoExpression {
 public:
  using Terms = std::map<VarSet, Rational>;

  InfoExpression() = default;

  /// H(a | given) = H(a, given) - H(given).
  static InfoExpression entropy(const VarSet& a, const VarSet& given = {});
  /// I(a; b | given) = H(a,g) + H(b,g) - H(a,b,g) - H(g).
  static InfoExpression mutual_information(const VarSet& a, const VarSet& b,
                                           const VarSet& given = {});

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<std::string> variables() const;

  /// Adds c * H(subset); keeps canonical form.
  void add_term(const VarSet& subset, const Rational& c);

  /// Replaces every occurrence of a variable by a group of variables, e.g.
  /// U0 -> {U0, W}. Names without a mapping are kept.
  InfoExpression substitute(const std::map<std::string, VarSet>& groups) const;

  InfoExpression& operator+=(const InfoExpression& other);
  InfoExpression& operator-=(const InfoExpression& other);
  InfoExpression& operator*=(const Rational& c);
  friend InfoExpression operator+(InfoExpression a, const InfoExpression& b) { return a += b; }
  friend InfoExpression operator-(InfoExpression a, const InfoExpression& b) { return a -= b; }
  friend InfoExpression operator*(const Rational& c, InfoExpression a) { return a *= c; }
  friend InfoExpression operator-(InfoExpression a) { return a *= Rational(-1); }
  friend bool operator==(const InfoExpression&, const InfoExpression&) = default;

  /// "H(A,B) - 2*H(B)"; "0" for the zero expression.
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace csbc::measures
