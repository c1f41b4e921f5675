#include "csbc/polytope/lin_system.hpp"

#include <algorithm>
#include <sstream>

namespace csbc::polytope {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt lcm_big(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

LinIneq::LinIneq(std::map<std::string, Rational> coefficients, Relation relation,
                 Rational constant)
    : relation_(relation), constant_(std::move(constant)) {
  for (auto& [name, c] : coefficients) {
    if (c != 0) coefficients_.emplace(name, std::move(c));
  }
  if (coefficients_.empty()) {
    int s = sign(constant_);
    if (relation_ == Relation::Equal) s = s != 0 ? 1 : 0;
    constant_ = Rational(s);
    return;
  }
  BigInt den = denominator(constant_);
  for (const auto& [name, c] : coefficients_) den = lcm_big(den, denominator(c));
  BigInt g = 0;
  for (const auto& [name, c] : coefficients_) {
    g = boost::multiprecision::gcd(g, BigInt(abs(numerator(c) * (den / denominator(c)))));
  }
  g = boost::multiprecision::gcd(
      g, BigInt(abs(numerator(constant_) * (den / denominator(constant_)))));
  Rational scale(den, g);
  if (relation_ == Relation::Equal && coefficients_.begin()->second < 0) scale = -scale;
  for (auto& [name, c] : coefficients_) c *= scale;
  constant_ *= scale;
}

Rational LinIneq::coefficient(const std::string& name) const {
  auto it = coefficients_.find(name);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

bool LinIneq::is_tautology() const {
  if (!coefficients_.empty()) return false;
  switch (relation_) {
    case Relation::LessEqual: return constant_ >= 0;
    case Relation::Less: return constant_ > 0;
    case Relation::Equal: return constant_ == 0;
  }
  return false;
}

bool LinIneq::is_contradiction() const { return coefficients_.empty() && !is_tautology(); }

Rational LinIneq::lhs_value(const Point& point) const {
  Rational total = 0;
  for (const auto& [name, c] : coefficients_) {
    auto it = point.find(name);
    if (it != point.end()) total += c * it->second;
  }
  return total;
}

bool LinIneq::satisfied_by(const Point& point) const {
  const Rational lhs = lhs_value(point);
  switch (relation_) {
    case Relation::LessEqual: return lhs <= constant_;
    case Relation::Less: return lhs < constant_;
    case Relation::Equal: return lhs == constant_;
  }
  return false;
}

std::string LinIneq::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, c] : coefficients_) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) out << csbc::to_string(mag) << "*";
    out << name;
  }
  if (first) out << "0";
  switch (relation_) {
    case Relation::LessEqual: out << " <= "; break;
    case Relation::Less: out << " < "; break;
    case Relation::Equal: out << " = "; break;
  }
  out << csbc::to_string(constant_);
  return out.str();
}

bool operator<(const LinIneq& a, const LinIneq& b) {
  if (a.coefficients_ != b.coefficients_) return a.coefficients_ < b.coefficients_;
  if (a.relation_ != b.relation_) return a.relation_ < b.relation_;
  return a.constant_ < b.constant_;
}

LinIneq combine(const LinIneq& a, const Rational& factor_a, const LinIneq& b,
                const Rational& factor_b, Relation relation) {
  std::map<std::string, Rational> coeffs;
  for (const auto& [name, c] : a.coefficients()) coeffs[name] += factor_a * c;
  for (const auto& [name, c] : b.coefficients()) coeffs[name] += factor_b * c;
  return LinIneq(std::move(coeffs), relation, factor_a * a.constant() + factor_b * b.constant());
}

LinSystem::LinSystem(std::vector<std::string> variables, std::vector<LinIneq> rows)
    : variables_(std::move(variables)) {
  std::vector<std::string> sorted = variables_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PolytopeError("duplicate variable in system declaration");
  }
  for (const auto& r : rows) add(r);
}

bool LinSystem::has_variable(const std::string& name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

void LinSystem::add(const LinIneq& row) {
  for (const auto& [name, c] : row.coefficients()) {
    if (!has_variable(name)) throw PolytopeError("row mentions undeclared variable '" + name + "'");
  }
  if (row.is_tautology()) return;
  auto it = std::lower_bound(rows_.begin(), rows_.end(), row);
  if (it != rows_.end() && *it == row) return;
  rows_.insert(it, row);
}

void LinSystem::add_variable(const std::string& name) {
  if (!has_variable(name)) variables_.push_back(name);
}

bool LinSystem::satisfied_by(const Point& point) const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const LinIneq& r) { return r.satisfied_by(point); });
}

LinSystem LinSystem::merged_with(const LinSystem& other) const {
  LinSystem out = *this;
  for (const auto& v : other.variables_) out.add_variable(v);
  for (const auto& r : other.rows_) out.add(r);
  return out;
}

}  // namespace csbc::polytope
