#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "csbc/regions/specializations.hpp"

namespace csbc::cli {

using regions::AuxiliarySpec;
using regions::RateTriple;
using regions::ScenarioSpec;

/// Largest alphabet accepted in scenario files.
inline constexpr std::size_t kMaxFileAlphabet = 8;

/**
 * JSON scenario document. All arrays are row-major (first index most
 * significant) and may be nested or flat:
 *
 *   alphabets  {"S1","S2","X","Y1","Y2"[,"U0","U1","U2"]} sizes
 *   source     over (s1, s2)
 *   channel    over (x, y1, y2), p(y1,y2|x)
 *   aux        over (s1, s2, u0, u1, u2), p(u0,u1,u2|s1,s2)   [optional]
 *   x_map      integers over (s1, s2, u0, u1, u2)             [with aux]
 *   rates      [R0, R1, R2]                                   [optional]
 *   marton     {"u_pmf": over (u0,u1,u2), "x_map": over (u0,u1,u2)}
 *   gray_wyner {"V": size, "v_cond": over (s1, s2, v)}
 *   degraded   {"U": size, "ux_pmf": over (u, x)}
 */
struct ScenarioFile {
  ScenarioSpec scenario;
  std::optional<AuxiliarySpec> aux;
  std::optional<RateTriple> rates;
  std::optional<regions::ChannelAux> marton;
  /// p(V|S1,S2).
  std::optional<measures::ConditionalPmf> gray_wyner;
  /// p(U,X).
  std::optional<measures::JointPmf> degraded;
};

/// Throws csbc::ParseError on malformed documents and failed validation.
ScenarioFile parse_scenario_file(std::string_view json_text);
ScenarioFile load_scenario_file(const std::string& path);

/// Flat-array JSON; parses back to an equal scenario.
std::string dump_scenario_file(const ScenarioFile& file);

}  // namespace csbc::cli
