#include "csbc/cli/scenario_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "csbc/parse_error.hpp"

namespace csbc::cli {

namespace {

using Json = nlohmann::ordered_json;
using measures::ConditionalPmf;
using measures::DeterministicMap;
using measures::FiniteVariable;
using measures::JointPmf;

void flatten(const Json& j, const std::string& key, std::vector<const Json*>& out) {
  if (j.is_array()) {
    for (const auto& e : j) flatten(e, key, out);
  } else if (j.is_number()) {
    out.push_back(&j);
  } else {
    throw ParseError("'" + key + "' must contain only numbers");
  }
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + " lacks '" + key + "'");
  return obj.at(key);
}

std::vector<double> reals(const Json& obj, const std::string& key, std::size_t expected) {
  std::vector<const Json*> flat;
  flatten(require(obj, key, "scenario"), key, flat);
  if (flat.size() != expected) {
    throw ParseError("'" + key + "' has " + std::to_string(flat.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  std::vector<double> out;
  for (const auto* v : flat) out.push_back(v->get<double>());
  return out;
}

std::vector<std::size_t> indices(const Json& obj, const std::string& key, std::size_t expected, std::size_t limit) {
  std::vector<const Json*> flat;
  flatten(require(obj, key, "scenario"), key, flat);
  if (flat.size() != expected) {
    throw ParseError("'" + key + "' has " + std::to_string(flat.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  std::vector<std::size_t> out;
  for (const auto* v : flat) {
    if (!v->is_number_integer() || v->get<long long>() < 0 || static_cast<std::size_t>(v->get<long long>()) >= limit) {
      throw ParseError("'" + key + "' entries must be integers in [0, " + std::to_string(limit) + ")");
    }
    out.push_back(static_cast<std::size_t>(v->get<long long>()));
  }
  return out;
}

std::size_t alphabet(const Json& obj, const std::string& key, const std::string& where) {
  const Json& v = require(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > static_cast<long long>(kMaxFileAlphabet)) {
    throw ParseError(where + " '" + key + "' must be an integer in [1, " + std::to_string(kMaxFileAlphabet) + "]");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

ScenarioFile build(const Json& doc) {
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");
  const Json& al = require(doc, "alphabets", "scenario");
  const std::size_t s1 = alphabet(al, "S1", "alphabets"), s2 = alphabet(al, "S2", "alphabets");
  const std::size_t nx = alphabet(al, "X", "alphabets");
  const std::size_t y1 = alphabet(al, "Y1", "alphabets"), y2 = alphabet(al, "Y2", "alphabets");

  ScenarioFile f{{regions::make_source(s1, s2, reals(doc, "source", s1 * s2)),
                  ConditionalPmf{{{"X", nx}}, {{"Y1", y1}, {"Y2", y2}}, reals(doc, "channel", nx * y1 * y2)}},
                 {}, {}, {}, {}, {}};
  f.scenario.validate();

  const bool has_u = al.contains("U0") || al.contains("U1") || al.contains("U2");
  std::size_t u0 = 1, u1 = 1, u2 = 1;
  if (has_u) {
    u0 = alphabet(al, "U0", "alphabets");
    u1 = alphabet(al, "U1", "alphabets");
    u2 = alphabet(al, "U2", "alphabets");
  }
  if (doc.contains("aux")) {
    if (!has_u) throw ParseError("'aux' needs U0, U1, U2 alphabets");
    const std::size_t cells = s1 * s2 * u0 * u1 * u2;
    f.aux = regions::make_aux(s1, s2, u0, u1, u2, reals(doc, "aux", cells), nx, indices(doc, "x_map", cells, nx));
    f.aux->validate(f.scenario);
  } else if (doc.contains("x_map")) {
    throw ParseError("'x_map' given without 'aux'");
  }
  if (doc.contains("rates")) {
    const auto r = reals(doc, "rates", 3);
    for (double v : r) {
      if (!(v >= 0)) throw ParseError("rates must be nonnegative");
    }
    f.rates = RateTriple{r[0], r[1], r[2]};
  }
  if (doc.contains("marton")) {
    if (!has_u) throw ParseError("'marton' needs U0, U1, U2 alphabets");
    const Json& m = doc.at("marton");
    std::vector<FiniteVariable> us{{"U0", u0}, {"U1", u1}, {"U2", u2}};
    const std::size_t cells = u0 * u1 * u2;
    regions::ChannelAux ca{JointPmf(us, reals(m, "u_pmf", cells)),
                           DeterministicMap{us, {"X", nx}, indices(m, "x_map", cells, nx)}};
    ca.x_map.validate();
    f.marton = std::move(ca);
  }
  if (doc.contains("gray_wyner")) {
    const Json& g = doc.at("gray_wyner");
    const std::size_t nv = alphabet(g, "V", "gray_wyner");
    ConditionalPmf v{{{"S1", s1}, {"S2", s2}}, {{"V", nv}}, reals(g, "v_cond", s1 * s2 * nv)};
    v.validate();
    f.gray_wyner = std::move(v);
  }
  if (doc.contains("degraded")) {
    const Json& d = doc.at("degraded");
    const std::size_t nu = alphabet(d, "U", "degraded");
    f.degraded = JointPmf({{"U", nu}, {"X", nx}}, reals(d, "ux_pmf", nu * nx));
  }
  return f;
}

}  // namespace

ScenarioFile parse_scenario_file(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  try {
    return build(doc);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    // Validation failures from measures/regions surface as parse errors of the file.
    throw ParseError(std::string("invalid scenario: ") + e.what());
  }
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_file(buf.str());
}

std::string dump_scenario_file(const ScenarioFile& f) {
  Json doc;
  Json al;
  const auto& src = f.scenario.source.variables();
  al["S1"] = src[0].alphabet_size;
  al["S2"] = src[1].alphabet_size;
  al["X"] = f.scenario.x_size();
  al["Y1"] = f.scenario.channel.outcome[0].alphabet_size;
  al["Y2"] = f.scenario.channel.outcome[1].alphabet_size;
  const auto* outcome = f.aux ? &f.aux->aux.outcome : f.marton ? &f.marton->u_pmf.variables() : nullptr;
  if (outcome) {
    for (const auto& v : *outcome) al[v.name] = v.alphabet_size;
  }
  doc["alphabets"] = al;
  doc["source"] = std::vector<double>(f.scenario.source.mass().begin(), f.scenario.source.mass().end());
  doc["channel"] = f.scenario.channel.mass;
  if (f.aux) {
    doc["aux"] = f.aux->aux.mass;
    doc["x_map"] = f.aux->x_map.table;
  }
  if (f.rates) doc["rates"] = {f.rates->r0, f.rates->r1, f.rates->r2};
  if (f.marton) {
    doc["marton"] = {{"u_pmf", std::vector<double>(f.marton->u_pmf.mass().begin(), f.marton->u_pmf.mass().end())},
                     {"x_map", f.marton->x_map.table}};
  }
  if (f.gray_wyner) {
    doc["gray_wyner"] = {{"V", f.gray_wyner->outcome[0].alphabet_size}, {"v_cond", f.gray_wyner->mass}};
  }
  if (f.degraded) {
    doc["degraded"] = {{"U", f.degraded->variables()[0].alphabet_size},
                       {"ux_pmf", std::vector<double>(f.degraded->mass().begin(), f.degraded->mass().end())}};
  }
  return doc.dump(2) + "\n";
}

}  // namespace csbc::cli
