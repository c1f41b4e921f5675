#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace csbc::cli {

using Json = nlohmann::ordered_json;

/// Result of one command, serializable as a single JSON document.
struct RunReport {
  std::vector<std::string> command;
  /// FNV-1a of the canonical configuration, 16 hex digits.
  std::string config_hash;
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0;
  std::string verdict;
  int exit_code = 0;
  Json summary = Json::object();
  /// Array of flat objects.
  Json rows = Json::array();
};

Json to_json(const RunReport& report);
/// Throws csbc::ParseError on missing or mistyped fields.
RunReport report_from_json(const Json& json);

std::uint64_t fnv1a(std::string_view data);
std::string config_hash(const Json& canonical_config);

/// Human-readable rendering: rows as an aligned table, then summary and verdict.
std::string render_table(const RunReport& report, bool show_rows = true);

}  // namespace csbc::cli
