#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "csbc/polytope/lin_system.hpp"

namespace csbc::polytope {

// Text format: one row per line, e.g. `3*v1 - 2*v2 + r0 <= 5/2`. Both sides
// may hold linear terms; relations are <=, <, =, >=, >. Coefficients are
// integers, decimals or p/q. `#` starts a comment. Names match
// [A-Za-z][A-Za-z0-9_]*.

/// Throws csbc::ParseError.
LinIneq parse_inequality(std::string_view line);

/// Variables are declared in order of first appearance.
LinSystem parse_system(std::string_view text);

/// One canonical row per line.
std::string format_system(const LinSystem& system);

/**
 * Renders a row with the variables selected by `on_left` on the left side and
 * everything else moved right, e.g. "H1 < v9 - v4". The relation flips if
 * needed so the left side's first coefficient is positive.
 */
std::string format_split(const LinIneq& row, const std::function<bool(const std::string&)>& on_left);

}  // namespace csbc::polytope
