#include "csbc/cli/run_report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "csbc/parse_error.hpp"

namespace csbc::cli {

namespace {

std::string cell_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v.get<double>());
    return buf;
  }
  return v.dump();
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("report lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["config_hash"] = r.config_hash;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["wall_time_s"] = r.wall_time_s;
  j["verdict"] = r.verdict;
  j["exit_code"] = r.exit_code;
  j["summary"] = r.summary;
  j["rows"] = r.rows;
  return j;
}

RunReport report_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("report must be a JSON object");
  RunReport r;
  r.command = field<std::vector<std::string>>(j, "command");
  r.config_hash = field<std::string>(j, "config_hash");
  if (!j.contains("seed")) throw ParseError("report lacks 'seed'");
  if (!j.at("seed").is_null()) r.seed = field<std::uint64_t>(j, "seed");
  r.wall_time_s = field<double>(j, "wall_time_s");
  r.verdict = field<std::string>(j, "verdict");
  r.exit_code = field<int>(j, "exit_code");
  r.summary = field<Json>(j, "summary");
  r.rows = field<Json>(j, "rows");
  if (!r.summary.is_object() || !r.rows.is_array()) throw ParseError("report summary/rows have the wrong type");
  return r;
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const Json& canonical_config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical_config.dump())));
  return buf;
}

std::string render_table(const RunReport& r, bool show_rows) {
  std::ostringstream out;
  if (show_rows && !r.rows.empty()) {
    std::vector<std::string> columns;
    for (const auto& row : r.rows) {
      for (const auto& [k, v] : row.items()) {
        if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
      }
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const auto& c : columns) width.push_back(c.size());
    for (const auto& row : r.rows) {
      std::vector<std::string> line;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        line.push_back(row.contains(columns[c]) ? cell_text(row.at(columns[c])) : "");
        width[c] = std::max(width[c], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      std::string text;
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (c) text += "  ";
        text += line[c] + std::string(width[c] - line[c].size(), ' ');
      }
      while (!text.empty() && text.back() == ' ') text.pop_back();
      out << text << "\n";
    };
    emit(columns);
    for (const auto& line : cells) emit(line);
    out << "\n";
  }
  for (const auto& [k, v] : r.summary.items()) out << k << ": " << cell_text(v) << "\n";
  out << "config: " << r.config_hash << "\n";
  out << "verdict: " << r.verdict << "\n";
  return out.str();
}

}  // namespace csbc::cli
