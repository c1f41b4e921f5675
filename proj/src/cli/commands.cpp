#include "csbc/cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "csbc/cli/run_report.hpp"
#include "csbc/cli/scenario_file.hpp"
#include "csbc/itp/expression_text.hpp"
#include "csbc/parse_error.hpp"
#include "csbc/polytope/system_text.hpp"
#include "csbc/regions/feasibility.hpp"
#include "csbc/regions/search.hpp"
#include "csbc/simcode/experiments.hpp"

namespace csbc::cli {

namespace {

using regions::RegionReport;

struct Globals {
  std::string format = "table";
  double tol = regions::kStrictTol;
  std::uint64_t seed = 1;
};

/// Output of one command before global formatting.
struct Outcome {
  RunReport report;
  /// Table-mode text replacing the generic rendering, if set.
  std::string table_override;
  bool table_rows = true;
};

std::string fixed12(double v) {
  if (std::abs(v) < 5e-13) v = 0;  // no "-0.000000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty item in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

regions::RateTriple parse_rates(const std::string& text) {
  const auto items = split_list(text);
  if (items.size() != 3) throw ParseError("--rates needs R0,R1,R2");
  double r[3];
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    try {
      r[i] = std::stod(items[static_cast<std::size_t>(i)], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != items[static_cast<std::size_t>(i)].size() || !(r[i] >= 0)) {
      throw ParseError("bad rate '" + items[static_cast<std::size_t>(i)] + "'");
    }
  }
  return {r[0], r[1], r[2]};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json scenario_json(const ScenarioFile& f) { return Json::parse(dump_scenario_file(f)); }

Json rates_json(const regions::RateTriple& r) { return Json::array({r.r0, r.r1, r.r2}); }

const regions::AuxiliarySpec& need_aux(const ScenarioFile& f) {
  if (!f.aux) throw ParseError("scenario has no 'aux' section");
  return *f.aux;
}

regions::RateTriple need_rates(const ScenarioFile& f, const std::string& flag) {
  if (!flag.empty()) return parse_rates(flag);
  if (!f.rates) throw ParseError("no rates: pass --rates R0,R1,R2 or add 'rates' to the scenario");
  return *f.rates;
}

/// Region rows; `satisfied` recomputed against the global tolerance.
void add_region_rows(Json& rows, const RegionReport& report, double tol, const std::string& group = "") {
  for (const auto& r : report.rows) {
    Json row;
    if (!group.empty()) row["group"] = group;
    row["name"] = r.name;
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["margin"] = r.margin;
    row["satisfied"] = r.margin > tol;
    rows.push_back(std::move(row));
  }
}

bool rows_satisfied(const Json& rows) {
  for (const auto& r : rows) {
    if (r.contains("satisfied") && !r.at("satisfied").get<bool>()) return false;
  }
  return true;
}

void set_verdict(RunReport& r, bool ok, const char* yes, const char* no) {
  r.verdict = ok ? yes : no;
  r.exit_code = ok ? kExitOk : kExitNegative;
}

double min_margin(const Json& rows) {
  double m = INFINITY;
  for (const auto& r : rows) {
    if (r.contains("margin")) m = std::min(m, r.at("margin").get<double>());
  }
  return m;
}

/// Value of a display combination such as "H(S1) + R0 + R1".
double combination_value(const std::string& text, const regions::RateTriple& rates, const measures::JointPmf& pmf) {
  double total = 0;
  std::stringstream in(text);
  std::string term;
  while (std::getline(in, term, '+')) {
    const auto b = term.find_first_not_of(' '), e = term.find_last_not_of(' ');
    const std::string t = term.substr(b, e - b + 1);
    if (t == "R0") {
      total += rates.r0;
    } else if (t == "R1") {
      total += rates.r1;
    } else if (t == "R2") {
      total += rates.r2;
    } else if (t.size() > 3 && t.rfind("H(", 0) == 0 && t.back() == ')') {
      total += measures::entropy(pmf, {t.substr(2, t.size() - 3)});
    } else {
      throw ParseError("unknown rate term '" + t + "'");
    }
  }
  return total;
}

/// Bound rows; with rates, `lower` rows need combination > bound and the others combination < bound.
void add_bound_rows(Json& rows, const std::vector<regions::BoundValue>& bounds, bool lower,
                    const std::optional<regions::RateTriple>& rates, const measures::JointPmf& pmf, double tol,
                    const std::string& group) {
  for (const auto& b : bounds) {
    Json row;
    row["group"] = group;
    row["name"] = b.name;
    row["combination"] = b.lhs;
    row["bound"] = b.value;
    if (rates) {
      const double v = combination_value(b.lhs, *rates, pmf);
      const double margin = lower ? v - b.value : b.value - v;
      row["value"] = v;
      row["margin"] = margin;
      row["satisfied"] = margin > tol;
    }
    rows.push_back(std::move(row));
  }
}

// ---------------------------------------------------------------- commands

Outcome cmd_info(const Globals& g, const std::string& expr_text, const std::string& scenario_path) {
  const ScenarioFile f = load_scenario_file(scenario_path);
  const auto expr = itp::parse_expression(expr_text, itp::v_definitions());
  const measures::JointPmf pmf = f.aux ? regions::compose(f.scenario, *f.aux) : f.scenario.source;
  const double value = measures::eval_expression(expr, pmf);
  Outcome o;
  auto& r = o.report;
  r.config_hash = config_hash(Json{{"command", "info"}, {"expression", expr.to_string()}, {"scenario", scenario_json(f)}});
  r.summary["expression"] = expr_text;
  r.summary["expanded"] = expr.to_string();
  r.summary["value"] = value;
  r.summary["value_text"] = fixed12(value);
  r.verdict = "ok";
  o.table_override = fixed12(value) + "\n";
  (void)g;
  return o;
}

Outcome cmd_prove(const std::string& statement_text, const std::string& constraints_path,
                  const std::string& ground_text) {
  const auto macros = itp::v_definitions();
  itp::InfoStatement st;
  if (statement_text.find_first_of("<>=") != std::string::npos) {
    st = itp::parse_statement(statement_text, macros);
  } else {
    st.expr = itp::parse_expression(statement_text, macros);
  }
  std::vector<itp::ProofConstraint> constraints;
  if (!constraints_path.empty()) constraints = itp::parse_constraints(read_file(constraints_path), macros);

  std::vector<std::string> names;
  if (!ground_text.empty()) {
    names = split_list(ground_text);
  } else {
    std::set<std::string> vars = st.expr.variables();
    for (const auto& c : constraints) {
      for (const auto& v : c.expr.variables()) vars.insert(v);
    }
    names.assign(vars.begin(), vars.end());
  }
  if (names.empty()) throw ParseError("empty ground set");
  const itp::GroundSet ground(names);
  const auto elementals = itp::elemental_inequalities(ground);

  std::vector<std::pair<std::string, measures::InfoExpression>> targets{{"ge", st.expr}};
  if (st.kind == itp::InfoStatement::Kind::Equal) targets.push_back({"le", -st.expr});

  Outcome o;
  auto& r = o.report;
  Json cfg{{"command", "prove"}, {"target", st.expr.to_string()},
           {"relation", st.kind == itp::InfoStatement::Kind::Equal ? "=" : ">="}, {"ground", names}};
  Json cj = Json::array();
  for (const auto& c : constraints) cj.push_back(c.expr.to_string());
  cfg["constraints"] = cj;
  r.config_hash = config_hash(cfg);

  bool all = true, verified = true;
  for (const auto& [part, target] : targets) {
    const auto res = itp::prove(target, constraints, ground);
    const bool ok = itp::verify_proof(res, target, constraints, ground);
    verified = verified && ok;
    if (res.verdict == itp::Verdict::Proven) {
      for (std::size_t k = 0; k < res.elemental_multipliers.size(); ++k) {
        if (res.elemental_multipliers[k] == 0) continue;
        r.rows.push_back(Json{{"part", part}, {"kind", "elemental"}, {"index", k},
                              {"multiplier", csbc::to_string(res.elemental_multipliers[k])},
                              {"term", elementals[k].to_string()}});
      }
      for (std::size_t j = 0; j < res.constraint_multipliers.size(); ++j) {
        if (res.constraint_multipliers[j] == 0) continue;
        r.rows.push_back(Json{{"part", part}, {"kind", "constraint"}, {"index", j},
                              {"multiplier", csbc::to_string(res.constraint_multipliers[j])},
                              {"term", constraints[j].expr.to_string()}});
      }
    } else {
      all = false;
      for (std::size_t c = 0; c < res.counterexample.size(); ++c) {
        if (res.counterexample[c] == 0) continue;
        measures::InfoExpression h;
        h.add_term(ground.subset_of(c + 1), 1);
        r.rows.push_back(Json{{"part", part}, {"kind", "counterexample"}, {"index", c},
                              {"multiplier", csbc::to_string(res.counterexample[c])}, {"term", h.to_string()}});
      }
    }
  }
  r.summary["target"] = st.expr.to_string();
  r.summary["relation"] = st.kind == itp::InfoStatement::Kind::Equal ? "= 0" : ">= 0";
  r.summary["ground"] = names;
  r.summary["elementals"] = elementals.size();
  r.summary["constraints"] = constraints.size();
  r.summary["certificate_verified"] = verified;
  if (!verified) {
    r.verdict = "certificate_rejected";
    r.exit_code = kExitNegative;
  } else {
    set_verdict(r, all, "proven", "not_provable");
  }
  return o;
}

Outcome cmd_fm(bool no_s3, const std::string& order_text) {
  const auto order = split_list(order_text);
  if (std::set<std::string>(order.begin(), order.end()) != std::set<std::string>{"R0", "R1", "R2"} ||
      order.size() != 3) {
    throw ParseError("--order must be a permutation of R0,R1,R2");
  }
  const auto fm = regions::run_fm_pipeline(!no_s3, order);
  auto on_left = [](const std::string& n) { return n == "H1" || n == "H2"; };
  Outcome o;
  auto& r = o.report;
  r.config_hash = config_hash(Json{{"command", "fm"}, {"with_relations", !no_s3}, {"order", order}});
  const auto expected = regions::expected_fm_system();
  // Expected rows first, in their reference order, then anything extra.
  const auto& got = fm.h_rows.rows();
  std::size_t index = 0;
  for (const auto& text : regions::expected_fm_text()) {
    const auto row = polytope::parse_inequality(text);
    if (std::find(got.begin(), got.end(), row) == got.end()) continue;
    r.rows.push_back(Json{{"index", ++index}, {"row", polytope::format_split(row, on_left)}, {"status", "expected"}});
  }
  for (const auto& row : got) {
    if (std::find(expected.rows().begin(), expected.rows().end(), row) != expected.rows().end()) continue;
    r.rows.push_back(Json{{"index", ++index}, {"row", polytope::format_split(row, on_left)}, {"status", "extra"}});
  }
  for (const auto& row : fm.missing) {
    r.rows.push_back(Json{{"index", nullptr}, {"row", polytope::format_split(row, on_left)}, {"status", "missing"}});
  }
  r.summary["order"] = order;
  r.summary["with_relations"] = !no_s3;
  r.summary["raw_count"] = fm.raw.size();
  r.summary["reference_raw_count"] = 28;
  r.summary["reduced_count"] = fm.h_rows.size();
  r.summary["matches_expected"] = fm.matches;
  r.summary["equivalent_given_relations"] = fm.equivalent;
  if (no_s3) {
    set_verdict(r, fm.equivalent, "equivalent", "not_equivalent");
  } else {
    set_verdict(r, fm.matches, "match", "mismatch");
  }
  return o;
}

Outcome cmd_region(const Globals& g, const std::string& kind, const std::string& scenario_path,
                   const std::string& rates_flag) {
  const ScenarioFile f = load_scenario_file(scenario_path);
  Outcome o;
  auto& r = o.report;
  Json cfg{{"command", "region"}, {"kind", kind}, {"tol", g.tol}, {"scenario", scenario_json(f)}};
  bool evaluative = true;
  std::optional<regions::RateTriple> rates;
  if (!rates_flag.empty()) rates = parse_rates(rates_flag);
  else if (f.rates) rates = f.rates;
  if (rates) cfg["rates"] = rates_json(*rates);

  if (kind == "thm2") {
    add_region_rows(r.rows, regions::eval_theorem2(f.scenario, need_aux(f)), g.tol);
  } else if (kind == "hc") {
    add_region_rows(r.rows, regions::eval_theorem1_hc(f.scenario, need_aux(f)), g.tol);
  } else if (kind == "compare") {
    bool all = true;
    for (const auto& c : regions::compare_thm2_hc(f.scenario, need_aux(f))) {
      r.rows.push_back(Json{{"name", c.name}, {"thm2_rhs", c.thm2_rhs}, {"hc_rhs", c.hc_rhs},
                            {"difference", c.hc_rhs - c.thm2_rhs}, {"dominates", c.dominates}});
      all = all && c.dominates;
    }
    set_verdict(r, all, "dominates", "not_dominated");
    evaluative = false;
  } else if (kind == "marton") {
    if (!f.marton) throw ParseError("scenario has no 'marton' section");
    if (!rates) throw ParseError("marton needs rates");
    add_region_rows(r.rows, regions::specialize_marton(f.scenario.channel, *f.marton, *rates), g.tol);
  } else if (kind == "gw") {
    if (!f.gray_wyner) throw ParseError("scenario has no 'gray_wyner' section");
    if (!rates) throw ParseError("gw needs link rates");
    const auto gw = regions::specialize_gray_wyner(f.scenario.source, *f.gray_wyner, *rates);
    add_region_rows(r.rows, gw.rows, g.tol, "rows");
    Json canonical = Json::array();
    add_region_rows(canonical, gw.canonical, g.tol, "canonical");
    const bool rows_ok = rows_satisfied(r.rows), canon_ok = rows_satisfied(canonical);
    for (auto& c : canonical) r.rows.push_back(std::move(c));
    r.summary["canonical_satisfied"] = canon_ok;
    set_verdict(r, rows_ok, "satisfied", "unsatisfied");
    evaluative = false;
  } else if (kind == "degraded") {
    if (!f.degraded) throw ParseError("scenario has no 'degraded' section");
    add_region_rows(r.rows, regions::specialize_degraded(f.scenario, *f.degraded), g.tol);
  } else if (kind == "cover" || kind == "decode" || kind == "superpos") {
    const auto pmf = regions::compose(f.scenario, need_aux(f));
    if (kind == "cover") {
      add_bound_rows(r.rows, regions::eval_covering_rates(f.scenario, *f.aux), true, rates, pmf, g.tol, "covering");
    } else if (kind == "decode") {
      add_bound_rows(r.rows, regions::eval_decoding_rates(f.scenario, *f.aux), false, rates, pmf, g.tol, "decoding");
    } else {
      const auto sb = regions::eval_superposition_rates(f.scenario, *f.aux);
      add_bound_rows(r.rows, sb.covering, true, rates, pmf, g.tol, "covering");
      add_bound_rows(r.rows, sb.decoding, false, rates, pmf, g.tol, "decoding");
    }
    if (!rates) {
      r.verdict = "bounds";
      evaluative = false;
    }
  } else {
    throw ParseError("unknown region kind '" + kind + "'");
  }
  if (evaluative) {
    set_verdict(r, rows_satisfied(r.rows), "satisfied", "unsatisfied");
    r.summary["min_margin"] = min_margin(r.rows);
  }
  r.summary["kind"] = kind;
  if (rates) r.summary["rates"] = rates_json(*rates);
  r.config_hash = config_hash(cfg);
  return o;
}

struct SimulateFlags {
  std::string kind, scenario, rates, scheme = "plain";
  std::size_t n = 8, trials = 100, threads = 0;
  double eps = 0.2, eps_prime = 0.1;
};

Json decoder_tally(const simcode::DecoderTally& t) {
  return Json{{"correct", t.correct}, {"E1", t.e1}, {"E2", t.e2}, {"E3", t.e3},
              {"none_typical", t.none_typical}, {"ambiguous", t.ambiguous}};
}

Outcome cmd_simulate(const Globals& g, const SimulateFlags& s) {
  const ScenarioFile f = load_scenario_file(s.scenario);
  simcode::ExperimentConfig c;
  c.rates = need_rates(f, s.rates);
  c.params = {s.n, s.eps, s.eps_prime};
  c.params.validate();
  if (s.scheme == "plain") {
    c.scheme = simcode::Scheme::Plain;
  } else if (s.scheme == "superposition") {
    c.scheme = simcode::Scheme::Superposition;
  } else {
    throw ParseError("--scheme must be plain or superposition");
  }
  c.trials = s.trials;
  c.seed = g.seed;
  c.threads = s.threads;
  if (s.kind != "cover" && s.kind != "e2e") throw ParseError("simulate kind must be cover or e2e");

  Outcome o;
  auto& r = o.report;
  r.seed = g.seed;
  r.config_hash = config_hash(Json{{"command", "simulate"}, {"kind", s.kind}, {"scenario", scenario_json(f)},
                                   {"rates", rates_json(c.rates)}, {"n", s.n}, {"eps", s.eps},
                                   {"eps_prime", s.eps_prime}, {"trials", s.trials}, {"scheme", s.scheme},
                                   {"seed", g.seed}});
  const Json rates = rates_json(c.rates);
  auto base_row = [&](const simcode::TrialRecord& t) {
    return Json{{"trial", t.trial}, {"seed", t.seed}, {"n", s.n}, {"rates", rates},
                {"source_typical", t.source_typical}, {"covering_failed", t.covering_failed},
                {"m0", t.m0}, {"m1", t.m1}, {"m2", t.m2}};
  };
  auto put_proportion = [&](const char* key, const simcode::Proportion& p) {
    r.summary[key] = p.estimate;
    r.summary[std::string(key) + "_ci95"] = Json::array({p.low, p.high});
  };
  r.summary["kind"] = s.kind;
  r.summary["scheme"] = s.scheme;
  r.summary["n"] = s.n;
  r.summary["eps"] = s.eps;
  r.summary["eps_prime"] = s.eps_prime;
  r.summary["rates"] = rates;
  r.summary["trials"] = s.trials;
  if (s.kind == "cover") {
    const auto res = simcode::run_covering_experiment(f.scenario, need_aux(f), c);
    for (const auto& t : res.records) r.rows.push_back(base_row(t));
    r.summary["atypical_sources"] = res.atypical_sources;
    r.summary["covering_failures"] = res.failure.hits;
    put_proportion("p_covering_failure", res.failure);
  } else {
    const auto res = simcode::run_end_to_end(f.scenario, need_aux(f), c);
    for (const auto& t : res.records) {
      Json row = base_row(t);
      row["decode1"] = simcode::to_string(t.decode1.event);
      row["decode1_status"] = simcode::to_string(t.decode1.status);
      row["decode2"] = simcode::to_string(t.decode2.event);
      row["decode2_status"] = simcode::to_string(t.decode2.status);
      row["error"] = t.error;
      r.rows.push_back(std::move(row));
    }
    r.summary["atypical_sources"] = res.atypical_sources;
    r.summary["covering_failures"] = res.covering_failures;
    r.summary["decoder1"] = decoder_tally(res.decoder1);
    r.summary["decoder2"] = decoder_tally(res.decoder2);
    r.summary["errors"] = res.error.hits;
    put_proportion("p_error", res.error);
  }
  r.verdict = "ok";
  o.table_rows = false;
  return o;
}

struct SearchFlags {
  std::string scenario, cardinalities = "1,1,1", save;
  std::size_t restarts = 8, budget = 2000, threads = 0;
};

Outcome cmd_search(const Globals& g, const SearchFlags& s) {
  ScenarioFile f = load_scenario_file(s.scenario);
  regions::SearchOptions opt;
  const auto card = split_list(s.cardinalities);
  if (card.size() != 3) throw ParseError("--card needs three cardinalities");
  for (std::size_t i = 0; i < 3; ++i) {
    const int v = std::stoi(card[i]);
    if (v < 1 || v > static_cast<int>(kMaxFileAlphabet)) throw ParseError("cardinalities must be in [1, 8]");
    opt.cardinalities[i] = static_cast<std::size_t>(v);
  }
  opt.restarts = s.restarts;
  opt.budget = s.budget;
  opt.seed = g.seed;
  opt.threads = s.threads;
  const auto res = regions::search_feasible_aux(f.scenario, opt);

  Outcome o;
  auto& r = o.report;
  r.seed = g.seed;
  f.aux.reset();
  r.config_hash = config_hash(Json{{"command", "search"}, {"scenario", scenario_json(f)},
                                   {"cardinalities", opt.cardinalities}, {"restarts", s.restarts},
                                   {"budget", s.budget}, {"seed", g.seed}});
  add_region_rows(r.rows, res.report, g.tol);
  r.summary["cardinalities"] = opt.cardinalities;
  r.summary["evaluations"] = res.evaluations;
  r.summary["min_margin"] = res.min_margin;
  r.summary["suggested_u0_cardinality"] = regions::suggested_u0_cardinality(f.scenario);
  f.aux = res.aux;
  r.summary["aux"] = Json{{"aux", res.aux.aux.mass}, {"x_map", res.aux.x_map.table}};
  if (!s.save.empty()) {
    std::ofstream out(s.save);
    if (!out) throw ParseError("cannot write '" + s.save + "'");
    out << dump_scenario_file(f);
    r.summary["saved"] = s.save;
  }
  set_verdict(r, res.min_margin > g.tol, "satisfied", "unsatisfied");
  return o;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint source-channel coding over broadcast channels: regions, proofs, simulation", "csbc"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--tol", g.tol, "Strictness tolerance: a row holds when its margin exceeds this");
  app.add_option("--seed", g.seed, "Master seed for simulate and search");

  std::string expr, scenario, constraints, ground, order = "R0,R1,R2", kind, rates;
  bool no_s3 = false;
  SimulateFlags sim;
  SearchFlags srch;

  auto* info = app.add_subcommand("info", "Evaluate an information expression on a scenario");
  info->add_option("expression", expr, "e.g. \"I(U1;Y1|U0)\"")->required();
  info->add_option("--scenario", scenario, "Scenario JSON file")->required();

  auto* prove = app.add_subcommand("prove", "Check Shannon provability of a linear information inequality");
  prove->add_option("statement", expr, "e.g. \"I(A;B|C) >= 0\"; a bare expression means >= 0")->required();
  prove->add_option("--constraints", constraints, "File with one equality constraint per line");
  prove->add_option("--ground", ground, "Comma-separated ground set (default: variables used)");

  auto* fm = app.add_subcommand("fm", "Eliminate R0, R1, R2 from the rate system and compare with the expected rows");
  fm->add_flag("--no-s3", no_s3, "Eliminate without the relations among v1..v11");
  fm->add_option("--order", order, "Elimination order, e.g. R2,R1,R0");

  auto* region = app.add_subcommand("region", "Evaluate a rate region on a scenario");
  region->add_option("kind", kind, "thm2|hc|compare|marton|gw|degraded|cover|decode|superpos")
      ->required()
      ->check(CLI::IsMember({"thm2", "hc", "compare", "marton", "gw", "degraded", "cover", "decode", "superpos"}));
  region->add_option("--scenario", scenario, "Scenario JSON file")->required();
  region->add_option("--rates", rates, "R0,R1,R2 (overrides the scenario's rates)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo of the random coding scheme");
  simulate->add_option("kind", sim.kind, "cover|e2e")->required()->check(CLI::IsMember({"cover", "e2e"}));
  simulate->add_option("--scenario", sim.scenario, "Scenario JSON file")->required();
  simulate->add_option("--rates", sim.rates, "R0,R1,R2");
  simulate->add_option("--n", sim.n, "Blocklength")->check(CLI::Range(1, 64));
  simulate->add_option("--trials", sim.trials, "Number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--scheme", sim.scheme, "plain|superposition")
      ->check(CLI::IsMember({"plain", "superposition"}));
  simulate->add_option("--eps", sim.eps, "Decoding typicality");
  simulate->add_option("--eps-prime", sim.eps_prime, "Encoding typicality (< eps)");
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");

  auto* search = app.add_subcommand("search", "Search auxiliaries maximizing the minimum Theorem-2 margin");
  search->add_option("--scenario", srch.scenario, "Scenario JSON file")->required();
  search->add_option("--card", srch.cardinalities, "Cardinalities of U0,U1,U2");
  search->add_option("--restarts", srch.restarts, "Random restarts")->check(CLI::PositiveNumber);
  search->add_option("--budget", srch.budget, "Evaluations per restart")->check(CLI::PositiveNumber);
  search->add_option("--threads", srch.threads, "Worker threads (0 = all cores)");
  search->add_option("--save", srch.save, "Write the scenario with the best auxiliaries here");

  for (auto* sub : {info, prove, fm, region, simulate, search}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  std::vector<std::string> echo(argv, argv + argc);
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (info->parsed()) {
      o = cmd_info(g, expr, scenario);
    } else if (prove->parsed()) {
      o = cmd_prove(expr, constraints, ground);
    } else if (fm->parsed()) {
      o = cmd_fm(no_s3, order);
    } else if (region->parsed()) {
      o = cmd_region(g, kind, scenario, rates);
    } else if (simulate->parsed()) {
      o = cmd_simulate(g, sim);
    } else {
      o = cmd_search(g, srch);
    }
  } catch (const simcode::BudgetExceeded& e) {
    err << "csbc: budget exceeded: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "csbc: " << e.what() << "\n";
    return kExitInputError;
  }
  o.report.command = std::move(echo);
  o.report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (g.format == "records") {
    out << to_json(o.report).dump(2) << "\n";
  } else if (!o.table_override.empty()) {
    out << o.table_override;
  } else {
    out << render_table(o.report, o.table_rows);
  }
  return o.report.exit_code;
}

}  // namespace csbc::cli
