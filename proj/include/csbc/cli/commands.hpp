#pragma once

#include <ostream>

namespace csbc::cli {

inline constexpr int kExitOk = 0;
/// Unsatisfied region, unproven statement, fm mismatch.
inline constexpr int kExitNegative = 1;
/// Malformed input, failed validation, budget exceeded.
inline constexpr int kExitInputError = 2;

/**
 * Command-line front end. Subcommands: info, prove, fm, region, simulate,
 * search. Global flags --format table|records, --tol, --seed. Reports go to
 * `out`, diagnostics to `err`; returns the exit code.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace csbc::cli
