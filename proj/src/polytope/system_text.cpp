#include "csbc/polytope/system_text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "csbc/parse_error.hpp"

namespace csbc::polytope {

namespace {

class RowParser {
 public:
  explicit RowParser(std::string_view text) : s_(text) {}

  LinIneq parse() {
    std::map<std::string, Rational> coeffs;
    Rational constant = 0;
    side(coeffs, constant, Rational(1));
    skip_ws();
    std::string rel;
    while (pos_ < s_.size() && (s_[pos_] == '<' || s_[pos_] == '>' || s_[pos_] == '=')) rel += s_[pos_++];
    if (rel.empty()) fail("expected a relation (<=, <, =, >=, >)");
    side(coeffs, constant, Rational(-1));
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    // Everything is now in `coeffs . x + constant REL 0` form.
    if (rel == "<=") return LinIneq(coeffs, Relation::LessEqual, -constant);
    if (rel == "<") return LinIneq(coeffs, Relation::Less, -constant);
    if (rel == "=" || rel == "==") return LinIneq(coeffs, Relation::Equal, -constant);
    for (auto& [n, c] : coeffs) c = -c;
    if (rel == ">=") return LinIneq(coeffs, Relation::LessEqual, constant);
    if (rel == ">") return LinIneq(coeffs, Relation::Less, constant);
    fail("unknown relation '" + rel + "'");
  }

 private:
  void side(std::map<std::string, Rational>& coeffs, Rational& constant, const Rational& sign) {
    skip_ws();
    bool first = true;
    while (true) {
      skip_ws();
      Rational term_sign = sign;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        if (s_[pos_] == '-') term_sign = -term_sign;
        ++pos_;
        skip_ws();
      } else if (!first) {
        return;
      }
      first = false;
      Rational value = 1;
      bool have_number = false;
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
        value = number();
        have_number = true;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          skip_ws();
          if (!name_start()) fail("expected a variable after '*'");
        }
      }
      if (name_start()) {
        coeffs[identifier()] += term_sign * value;
      } else if (have_number) {
        constant += term_sign * value;
      } else {
        fail("expected a term");
      }
    }
  }

  Rational number() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
    BigInt num(digits.empty() ? "0" : digits);
    BigInt den = 1;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        num = num * 10 + (s_[pos_++] - '0');
        den *= 10;
      }
    }
    Rational value(num, den);
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::string d;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
      if (d.empty() || BigInt(d) == 0) fail("bad denominator");
      value /= Rational(BigInt(d));
    }
    return value;
  }

  bool name_start() const {
    return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]));
  }

  std::string identifier() {
    std::string id;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      id += s_[pos_++];
    }
    return id;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("inequality parse error at column " + std::to_string(pos_ + 1) + ": " + what +
                     " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
  return line;
}

void write_terms(std::ostream& out, const std::vector<std::pair<std::string, Rational>>& terms) {
  bool first = true;
  for (const auto& [name, c] : terms) {
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
}

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    const long num = cut < s.size() ? std::stol(s.substr(cut)) : -1;
    return std::make_pair(s.substr(0, cut), num);
  };
  return split(a) < split(b);
}

}  // namespace

LinIneq parse_inequality(std::string_view line) {
  const auto body = strip_comment(line);
  if (body.empty()) throw ParseError("empty inequality");
  return RowParser(body).parse();
}

LinSystem parse_system(std::string_view text) {
  std::vector<std::string> vars;
  std::vector<LinIneq> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto body = strip_comment(text.substr(start, end - start));
    if (!body.empty()) {
      LinIneq row = RowParser(body).parse();
      for (const auto& [name, c] : row.coefficients()) {
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
      }
      rows.push_back(std::move(row));
    }
    start = end + 1;
  }
  return LinSystem(std::move(vars), std::move(rows));
}

std::string format_system(const LinSystem& system) {
  std::ostringstream out;
  for (const auto& r : system.rows()) out << r.to_string() << "\n";
  return out.str();
}

std::string format_split(const LinIneq& row, const std::function<bool(const std::string&)>& on_left) {
  std::vector<std::pair<std::string, Rational>> left, right;
  for (const auto& [name, c] : row.coefficients()) {
    if (on_left(name)) {
      left.emplace_back(name, c);
    } else {
      right.emplace_back(name, -c);
    }
  }
  Rational constant = row.constant();
  bool flip = !left.empty() && left.front().second < 0;
  if (flip) {
    for (auto& [n, c] : left) c = -c;
    for (auto& [n, c] : right) c = -c;
    constant = -constant;
  }
  // Right side: positive terms first, then negative, each in natural name order (v2 before v10).
  std::stable_sort(right.begin(), right.end(), [](const auto& a, const auto& b) {
    if ((a.second > 0) != (b.second > 0)) return a.second > 0;
    return natural_less(a.first, b.first);
  });
  if (constant != 0) right.emplace_back("", constant);

  std::ostringstream out;
  write_terms(out, left);
  switch (row.relation()) {
    case Relation::LessEqual: out << (flip ? " >= " : " <= "); break;
    case Relation::Less: out << (flip ? " > " : " < "); break;
    case Relation::Equal: out << " = "; break;
  }
  std::ostringstream rhs;
  bool first = true;
  for (const auto& [name, c] : right) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) rhs << "-";
    } else {
      rhs << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (name.empty()) {
      rhs << csbc::to_string(mag);
    } else {
      if (mag != 1) rhs << csbc::to_string(mag) << "*";
      rhs << name;
    }
  }
  if (first) rhs << "0";
  out << rhs.str();
  return out.str();
}

}  // namespace csbc::polytope
