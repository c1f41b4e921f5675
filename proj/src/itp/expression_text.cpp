#include "csbc/itp/expression_text.hpp"

#include <cctype>

#include "csbc/parse_error.hpp"

namespace csbc::itp {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::map<std::string, InfoExpression>& macros)
      : s_(text), macros_(macros) {}

  InfoExpression expression() {
    InfoExpression out;
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign = 1;
      if (peek('+') || peek('-')) {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        return out;
      }
      first = false;
      out += sign * term();
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }

  std::string relation() {
    skip_ws();
    std::string rel;
    while (pos_ < s_.size() && (s_[pos_] == '<' || s_[pos_] == '>' || s_[pos_] == '=')) rel += s_[pos_++];
    return rel;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in '" +
                     std::string(s_) + "'");
  }

 private:
  InfoExpression term() {
    Rational coef = 1;
    bool have_number = false;
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      coef = number();
      have_number = true;
      skip_ws();
      if (peek('*')) {
        ++pos_;
        skip_ws();
        if (!name_start()) fail("expected H(...), I(...) or a name after '*'");
      }
    }
    if (!name_start()) {
      if (have_number) {
        if (coef != 0) fail("nonzero constant terms are not allowed");
        return {};
      }
      fail("expected a term");
    }
    const std::size_t name_pos = pos_;
    const std::string id = identifier();
    skip_ws();
    if ((id == "H" || id == "I") && peek('(')) {
      ++pos_;
      InfoExpression atom;
      if (id == "H") {
        const VarSet a = list();
        VarSet given;
        if (peek('|')) {
          ++pos_;
          given = list();
        }
        atom = InfoExpression::entropy(a, given);
      } else {
        const VarSet a = list();
        expect(';');
        const VarSet b = list();
        VarSet given;
        if (peek('|')) {
          ++pos_;
          given = list();
        }
        atom = InfoExpression::mutual_information(a, b, given);
      }
      expect(')');
      return coef * atom;
    }
    auto it = macros_.find(id);
    if (it == macros_.end()) {
      pos_ = name_pos;
      fail("unknown name '" + id + "'");
    }
    return coef * it->second;
  }

  VarSet list() {
    VarSet names;
    while (true) {
      skip_ws();
      if (!name_start()) fail("expected a variable name");
      names.push_back(identifier());
      skip_ws();
      if (!peek(',')) break;
      ++pos_;
    }
    return measures::make_varset(std::move(names));
  }

  Rational number() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    BigInt num(digits.empty() ? "0" : digits);
    BigInt den = 1;
    if (peek('.')) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        num = num * 10 + (s_[pos_++] - '0');
        den *= 10;
      }
    }
    Rational value(num, den);
    if (peek('/')) {
      ++pos_;
      std::string d;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
      if (d.empty() || BigInt(d) == 0) fail("bad denominator");
      value /= Rational(BigInt(d));
    }
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  bool name_start() const { return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])); }

  std::string identifier() {
    std::string id;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      id += s_[pos_++];
    }
    return id;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  const std::map<std::string, InfoExpression>& macros_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

InfoExpression parse_expression(std::string_view text, const std::map<std::string, InfoExpression>& macros) {
  ExprParser p(text, macros);
  auto e = p.expression();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return e;
}

InfoStatement parse_statement(std::string_view text, const std::map<std::string, InfoExpression>& macros) {
  ExprParser p(text, macros);
  auto lhs = p.expression();
  const auto rel = p.relation();
  if (rel.empty()) p.fail("expected >=, <= or =");
  auto rhs = p.expression();
  if (!p.at_end()) p.fail("unexpected trailing input");
  if (rel == ">=") return {InfoStatement::Kind::GreaterEqual, lhs - rhs};
  if (rel == "<=") return {InfoStatement::Kind::GreaterEqual, rhs - lhs};
  if (rel == "=" || rel == "==") return {InfoStatement::Kind::Equal, lhs - rhs};
  p.fail("unsupported relation '" + rel + "'");
}

std::vector<ProofConstraint> parse_constraints(std::string_view text,
                                               const std::map<std::string, InfoExpression>& macros) {
  std::vector<ProofConstraint> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    start = end + 1;
    if (line.empty()) continue;
    auto st = parse_statement(line, macros);
    if (st.kind != InfoStatement::Kind::Equal) {
      throw ParseError("constraint '" + std::string(line) + "' is not an equality");
    }
    // Classify by the left side when the right side is literally 0.
    const auto eq = line.find('=');
    const auto lhs = trim(line.substr(0, eq));
    const auto rhs = trim(line.substr(line.find_last_of('=') + 1));
    ProofConstraint c = ProofConstraint::equality(st.expr);
    if (rhs == "0" && lhs.size() > 2 && lhs.back() == ')' && lhs.find(')') == lhs.size() - 1) {
      if (lhs.substr(0, 2) == "H(") c.kind = ProofConstraint::Kind::FunctionalDependency;
      if (lhs.substr(0, 2) == "I(") c.kind = ProofConstraint::Kind::Independence;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace csbc::itp
