#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "csbc/itp/prover.hpp"

namespace csbc::itp {

// Grammar:
//   statement := expr REL expr        REL in >=, <=, =
//   expr      := ['+'|'-'] term (('+'|'-') term)*
//   term      := [coef ['*']] atom | coef
//   atom      := 'H(' list ['|' list] ')' | 'I(' list ';' list ['|' list] ')' | macro
//   coef      := integer | decimal | p/q
// Lists are comma-separated names [A-Za-z][A-Za-z0-9_]*. Bare names are looked
// up in the macro table (e.g. v1..v11). The only constant allowed is 0.

/// Throws csbc::ParseError.
InfoExpression parse_expression(std::string_view text,
                                const std::map<std::string, InfoExpression>& macros = {});

struct InfoStatement {
  enum class Kind { GreaterEqual, Equal };
  Kind kind = Kind::GreaterEqual;
  /// The statement reads `expr >= 0` or `expr = 0`.
  InfoExpression expr;
};

/// "a <= b" is normalized to b - a >= 0.
InfoStatement parse_statement(std::string_view text,
                              const std::map<std::string, InfoExpression>& macros = {});

/**
 * One constraint per line, `#` comments. Each line is a statement that must be
 * an equality. `H(A|B) = 0` becomes a functional dependency and `I(A;B|C) = 0`
 * an independence; anything else a general linear equality.
 */
std::vector<ProofConstraint> parse_constraints(std::string_view text,
                                               const std::map<std::string, InfoExpression>& macros = {});

}  // namespace csbc::itp
