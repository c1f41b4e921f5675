#include "csbc/measures/info_expression.hpp"

#include <algorithm>
#include <sstream>

namespace csbc::measures {

VarSet make_varset(VarSet names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

VarSet varset_union(const VarSet& a, const VarSet& b) {
  VarSet all = a;
  all.insert(all.end(), b.begin(), b.end());
  return make_varset(std::move(all));
}

InfoExpression InfoExpression::entropy(const VarSet& a, const VarSet& given) {
  InfoExpression e;
  e.add_term(varset_union(a, given), Rational(1));
  e.add_term(make_varset(given), Rational(-1));
  return e;
}

InfoExpression InfoExpression::mutual_information(const VarSet& a, const VarSet& b,
                                                  const VarSet& given) {
  InfoExpression e;
  e.add_term(varset_union(a, given), Rational(1));
  e.add_term(varset_union(b, given), Rational(1));
  e.add_term(varset_union(varset_union(a, b), given), Rational(-1));
  e.add_term(make_varset(given), Rational(-1));
  return e;
}

std::set<std::string> InfoExpression::variables() const {
  std::set<std::string> names;
  for (const auto& [subset, c] : terms_) names.insert(subset.begin(), subset.end());
  return names;
}

void InfoExpression::add_term(const VarSet& subset, const Rational& c) {
  if (subset.empty() || c == 0) return;
  VarSet key = make_varset(subset);
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

InfoExpression InfoExpression::substitute(const std::map<std::string, VarSet>& groups) const {
  InfoExpression out;
  for (const auto& [subset, c] : terms_) {
    VarSet expanded;
    for (const auto& name : subset) {
      auto it = groups.find(name);
      if (it == groups.end()) {
        expanded.push_back(name);
      } else {
        expanded.insert(expanded.end(), it->second.begin(), it->second.end());
      }
    }
    out.add_term(expanded, c);
  }
  return out;
}

InfoExpression& InfoExpression::operator+=(const InfoExpression& other) {
  for (const auto& [subset, c] : other.terms_) add_term(subset, c);
  return *this;
}

InfoExpression& InfoExpression::operator-=(const InfoExpression& other) {
  for (const auto& [subset, c] : other.terms_) add_term(subset, -c);
  return *this;
}

InfoExpression& InfoExpression::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [subset, coeff] : terms_) coeff *= c;
  return *this;
}

std::string InfoExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [subset, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) out << csbc::to_string(mag) << "*";
    out << "H(";
    for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? "," : "") << subset[i];
    out << ")";
  }
  return out.str();
}

}  // namespace csbc::measures
