#include "csbc/polytope/fourier_motzkin.hpp"

#include <algorithm>

#include "csbc/polytope/simplex.hpp"

namespace csbc::polytope {

namespace {

Relation pair_relation(const LinIneq& a, const LinIneq& b) {
  return a.is_strict() || b.is_strict() ? Relation::Less : Relation::LessEqual;
}

std::vector<std::string> without(const std::vector<std::string>& vars, const std::string& var) {
  std::vector<std::string> out;
  for (const auto& v : vars) {
    if (v != var) out.push_back(v);
  }
  return out;
}

std::size_t var_index(const std::vector<std::string>& vars, const std::string& name) {
  return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), name) - vars.begin());
}

LpProblem::Row closed_row(const LinIneq& r, const std::vector<std::string>& vars,
                          std::size_t extra_columns) {
  LpProblem::Row row;
  row.coeffs.assign(vars.size() + extra_columns, Rational(0));
  for (const auto& [name, c] : r.coefficients()) row.coeffs[var_index(vars, name)] = c;
  row.equality = r.relation() == Relation::Equal;
  row.rhs = r.constant();
  return row;
}

}  // namespace

LinSystem fm_eliminate(const LinSystem& system, const std::string& var) {
  if (!system.has_variable(var)) throw PolytopeError("cannot eliminate unknown variable '" + var + "'");
  LinSystem out(without(system.variables(), var));
  const auto& rows = system.rows();

  auto eq = std::find_if(rows.begin(), rows.end(), [&](const LinIneq& r) {
    return r.relation() == Relation::Equal && r.mentions(var);
  });
  if (eq != rows.end()) {
    const Rational a = eq->coefficient(var);
    for (auto it = rows.begin(); it != rows.end(); ++it) {
      if (it == eq) continue;
      const Rational c = it->coefficient(var);
      if (c == 0) {
        out.add(*it);
      } else {
        out.add(combine(*it, Rational(1), *eq, Rational(-c / a), it->relation()));
      }
    }
    return out;
  }

  std::vector<const LinIneq*> pos, neg;
  for (const auto& r : rows) {
    const Rational c = r.coefficient(var);
    if (c > 0) {
      pos.push_back(&r);
    } else if (c < 0) {
      neg.push_back(&r);
    } else {
      out.add(r);
    }
  }
  for (const LinIneq* p : pos) {
    const Rational cp = p->coefficient(var);
    for (const LinIneq* n : neg) {
      const Rational cn = -n->coefficient(var);
      out.add(combine(*p, cn, *n, cp, pair_relation(*p, *n)));
    }
  }
  return out;
}

LinSystem eliminate_all(const LinSystem& system, const std::vector<std::string>& order) {
  std::vector<std::string> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PolytopeError("elimination order repeats a variable");
  }
  LinSystem current = system;
  for (const auto& v : order) current = fm_eliminate(current, v);
  return current;
}

bool implies(const LinSystem& system, const LinIneq& row) {
  const auto& vars = system.variables();
  for (const auto& [name, c] : row.coefficients()) {
    if (!system.has_variable(name)) throw PolytopeError("row mentions undeclared variable '" + name + "'");
  }
  if (row.coefficients().empty()) {
    // Constant row: implied iff it is a tautology or the system is infeasible.
    return row.is_tautology() || !is_feasible(system).feasible;
  }
  auto check_side = [&](const std::map<std::string, Rational>& coeffs, const Rational& bound) {
    LpProblem lp;
    lp.num_vars = vars.size();
    lp.nonneg.assign(vars.size(), false);
    lp.cost.assign(vars.size(), Rational(0));
    for (const auto& [name, c] : coeffs) lp.cost[var_index(vars, name)] = -c;
    for (const auto& r : system.rows()) lp.rows.push_back(closed_row(r, vars, 0));
    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible) return true;
    if (sol.status == LpStatus::Unbounded) return false;
    return -sol.objective <= bound;
  };
  if (!check_side(row.coefficients(), row.constant())) return false;
  if (row.relation() == Relation::Equal) {
    std::map<std::string, Rational> neg;
    for (const auto& [name, c] : row.coefficients()) neg.emplace(name, -c);
    return check_side(neg, -row.constant());
  }
  return true;
}

LinSystem remove_redundant(const LinSystem& system) {
  std::vector<LinIneq> kept = system.rows();
  for (std::size_t i = 0; i < kept.size();) {
    if (kept[i].relation() == Relation::Equal) {
      ++i;
      continue;
    }
    std::vector<LinIneq> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (implies(LinSystem(system.variables(), others), kept[i])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return LinSystem(system.variables(), std::move(kept));
}

FeasibilityResult is_feasible(const LinSystem& system) {
  const auto& vars = system.variables();
  const auto& rows = system.rows();
  const std::size_t t = vars.size();  // strictness slack column
  LpProblem lp;
  lp.num_vars = vars.size() + 1;
  lp.nonneg.assign(lp.num_vars, false);
  lp.nonneg[t] = true;
  lp.cost.assign(lp.num_vars, Rational(0));
  lp.cost[t] = -1;
  for (const auto& r : rows) {
    auto row = closed_row(r, vars, 1);
    if (r.is_strict()) row.coeffs[t] = 1;
    lp.rows.push_back(std::move(row));
  }
  LpProblem::Row cap;
  cap.coeffs.assign(lp.num_vars, Rational(0));
  cap.coeffs[t] = 1;
  cap.rhs = 1;
  lp.rows.push_back(std::move(cap));

  const LpSolution sol = solve_lp(lp);
  FeasibilityResult result;
  if (sol.status == LpStatus::Optimal && -sol.objective > 0) {
    result.feasible = true;
    for (std::size_t v = 0; v < vars.size(); ++v) result.witness[vars[v]] = sol.x[v];
    return result;
  }
  if (sol.status == LpStatus::Infeasible) {
    result.certificate.assign(sol.farkas.begin(), sol.farkas.begin() + static_cast<std::ptrdiff_t>(rows.size()));
  } else {
    // Optimum t = 0: the negated duals combine the rows into 0 < 0 or 0 <= negative.
    result.certificate.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) result.certificate[i] = -sol.dual[i];
  }
  return result;
}

bool verify_infeasibility_certificate(const LinSystem& system,
                                      const std::vector<Rational>& certificate) {
  const auto& rows = system.rows();
  if (certificate.size() != rows.size()) return false;
  std::map<std::string, Rational> lhs;
  Rational rhs = 0;
  bool strict_used = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational& z = certificate[i];
    if (z == 0) continue;
    if (rows[i].relation() != Relation::Equal && z < 0) return false;
    for (const auto& [name, c] : rows[i].coefficients()) lhs[name] += z * c;
    rhs += z * rows[i].constant();
    if (rows[i].is_strict() && z > 0) strict_used = true;
  }
  for (const auto& [name, c] : lhs) {
    if (c != 0) return false;
  }
  return rhs < 0 || (rhs == 0 && strict_used);
}

}  // namespace csbc::polytope
