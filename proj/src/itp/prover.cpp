#include "csbc/itp/prover.hpp"

#include <algorithm>

#include "csbc/polytope/simplex.hpp"

namespace csbc::itp {

namespace {

using MI = InfoExpression;

InfoExpression cmi(const VarSet& a, const VarSet& b, const VarSet& c = {}) {
  return MI::mutual_information(a, b, c);
}

}  // namespace

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ProverError("empty ground set");
  if (names_.size() > kMaxGroundSet) {
    throw ProverError("ground set of " + std::to_string(names_.size()) + " variables exceeds the cap of " +
                      std::to_string(kMaxGroundSet));
  }
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ProverError("duplicate name in ground set");
  }
}

bool GroundSet::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::uint64_t GroundSet::mask_of(const VarSet& subset) const {
  std::uint64_t mask = 0;
  for (const auto& n : subset) {
    auto it = std::find(names_.begin(), names_.end(), n);
    if (it == names_.end()) throw ProverError("name '" + n + "' is outside the ground set");
    mask |= std::uint64_t{1} << (it - names_.begin());
  }
  return mask;
}

VarSet GroundSet::subset_of(std::uint64_t mask) const {
  VarSet out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (mask >> i & 1u) out.push_back(names_[i]);
  }
  return measures::make_varset(std::move(out));
}

std::vector<Rational> GroundSet::to_vector(const InfoExpression& expr) const {
  std::vector<Rational> v(dimension(), Rational(0));
  for (const auto& [subset, c] : expr.terms()) v[mask_of(subset) - 1] += c;
  return v;
}

InfoExpression GroundSet::from_vector(const std::vector<Rational>& coords) const {
  InfoExpression e;
  for (std::size_t i = 0; i < coords.size(); ++i) e.add_term(subset_of(i + 1), coords[i]);
  return e;
}

std::vector<InfoExpression> elemental_inequalities(const GroundSet& ground) {
  const std::size_t n = ground.size();
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::vector<InfoExpression> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t rest = all & ~(std::uint64_t{1} << i);
    out.push_back(InfoExpression::entropy({ground.names()[i]}, ground.subset_of(rest)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t others = all & ~(std::uint64_t{1} << i) & ~(std::uint64_t{1} << j);
      // Enumerate every subset K of `others`, including the empty set.
      for (std::uint64_t k = others;; k = (k - 1) & others) {
        out.push_back(cmi({ground.names()[i]}, {ground.names()[j]}, ground.subset_of(k)));
        if (k == 0) break;
      }
    }
  }
  return out;
}

ProofConstraint ProofConstraint::functional_dependency(const VarSet& a, const VarSet& b) {
  return {Kind::FunctionalDependency, InfoExpression::entropy(a, b)};
}

ProofConstraint ProofConstraint::independence(const VarSet& a, const VarSet& b, const VarSet& c) {
  return {Kind::Independence, cmi(a, b, c)};
}

ProofConstraint ProofConstraint::equality(InfoExpression expr) {
  return {Kind::LinearEquality, std::move(expr)};
}

ProofResult prove(const InfoExpression& target, const std::vector<ProofConstraint>& constraints,
                  const GroundSet& ground) {
  using Sparse = std::vector<std::pair<std::size_t, Rational>>;
  auto sparse = [&](const InfoExpression& e) {
    Sparse out;
    const auto dense = ground.to_vector(e);
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] != 0) out.emplace_back(i, dense[i]);
    }
    return out;
  };
  const auto target_vec = ground.to_vector(target);
  std::vector<Sparse> columns;
  for (const auto& e : elemental_inequalities(ground)) columns.push_back(sparse(e));
  const std::size_t num_elemental = columns.size();
  // Free constraint multipliers enter as a +/- column pair.
  for (const auto& c : constraints) {
    auto v = sparse(c.expr);
    columns.push_back(v);
    for (auto& [i, x] : v) x = -x;
    columns.push_back(std::move(v));
  }

  // Delayed column generation: solve over an active subset of columns and
  // the coordinates they touch, then price the rest with the Farkas vector.
  std::vector<bool> active(columns.size(), false);
  for (std::size_t j = num_elemental; j < columns.size(); ++j) active[j] = true;
  ProofResult result;
  while (true) {
    std::vector<bool> row_used(ground.dimension(), false);
    for (std::size_t i = 0; i < target_vec.size(); ++i) row_used[i] = target_vec[i] != 0;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (!active[j]) continue;
      cols.push_back(j);
      for (const auto& [i, x] : columns[j]) row_used[i] = true;
    }
    std::vector<std::size_t> rows;
    std::vector<std::size_t> row_pos(ground.dimension(), 0);
    for (std::size_t i = 0; i < row_used.size(); ++i) {
      if (row_used[i]) {
        row_pos[i] = rows.size();
        rows.push_back(i);
      }
    }
    std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      for (const auto& [i, x] : columns[cols[k]]) a[row_pos[i]][k] = x;
    }
    std::vector<Rational> b(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) b[r] = target_vec[rows[r]];
    const auto sol = polytope::solve_standard_form(a, b, std::vector<Rational>(cols.size(), Rational(0)));

    if (sol.status == polytope::LpStatus::Optimal) {
      std::vector<Rational> x(columns.size(), Rational(0));
      for (std::size_t k = 0; k < cols.size(); ++k) x[cols[k]] = sol.x[k];
      result.verdict = Verdict::Proven;
      result.elemental_multipliers.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(num_elemental));
      for (std::size_t j = 0; j < constraints.size(); ++j) {
        result.constraint_multipliers.push_back(x[num_elemental + 2 * j] - x[num_elemental + 2 * j + 1]);
      }
      return result;
    }

    std::vector<Rational> y(ground.dimension(), Rational(0));
    for (std::size_t r = 0; r < rows.size(); ++r) y[rows[r]] = sol.farkas[r];
    std::vector<std::pair<Rational, std::size_t>> violated;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (active[j]) continue;
      Rational v = 0;
      for (const auto& [i, x] : columns[j]) {
        if (y[i] != 0) v += x * y[i];
      }
      if (v < 0) violated.emplace_back(std::move(v), j);
    }
    if (violated.empty()) {
      result.verdict = Verdict::NotProvable;
      result.counterexample = std::move(y);
      return result;
    }
    constexpr std::size_t kBatch = 24;
    std::sort(violated.begin(), violated.end());
    if (violated.size() > kBatch) violated.resize(kBatch);
    for (const auto& [v, j] : violated) active[j] = true;
  }
}

bool verify_proof(const ProofResult& result, const InfoExpression& target,
                  const std::vector<ProofConstraint>& constraints, const GroundSet& ground) {
  const auto elementals = elemental_inequalities(ground);
  auto dot = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
    }
    return s;
  };
  if (result.verdict == Verdict::Proven) {
    if (result.elemental_multipliers.size() != elementals.size() ||
        result.constraint_multipliers.size() != constraints.size()) {
      return false;
    }
    InfoExpression sum;
    for (std::size_t k = 0; k < elementals.size(); ++k) {
      const Rational& l = result.elemental_multipliers[k];
      if (l < 0) return false;
      if (l != 0) sum += l * elementals[k];
    }
    for (std::size_t j = 0; j < constraints.size(); ++j) {
      sum += result.constraint_multipliers[j] * constraints[j].expr;
    }
    return sum == target;
  }
  const auto& h = result.counterexample;
  if (h.size() != ground.dimension()) return false;
  for (const auto& e : elementals) {
    if (dot(ground.to_vector(e), h) < 0) return false;
  }
  for (const auto& c : constraints) {
    if (dot(ground.to_vector(c.expr), h) != 0) return false;
  }
  return dot(ground.to_vector(target), h) < 0;
}

std::map<std::string, InfoExpression> v_definitions() {
  std::map<std::string, InfoExpression> v;
  v["v1"] = cmi({"U0"}, {"S1", "S2"});
  v["v2"] = cmi({"U1"}, {"S2"}, {"S1"});
  v["v3"] = cmi({"U2"}, {"S1"}, {"S2"});
  v["v4"] = cmi({"U0"}, {"S1", "S2"}) + cmi({"U1"}, {"U0", "S2"}, {"S1"});
  v["v5"] = cmi({"U0"}, {"S1", "S2"}) + cmi({"U2"}, {"U0", "S1"}, {"S2"});
  v["v6"] = cmi({"U1", "S1"}, {"U2", "S2"}) - cmi({"S1"}, {"S2"});
  v["v7"] = cmi({"U0"}, {"S1", "S2"}) + cmi({"U1"}, {"U2"}, {"U0", "S1", "S2"}) +
            cmi({"U1"}, {"U0", "S2"}, {"S1"}) + cmi({"U2"}, {"U0", "S1"}, {"S2"});
  v["v8"] = cmi({"U1", "S1"}, {"U0", "Y1"});
  v["v9"] = cmi({"U0", "U1", "S1"}, {"Y1"}) + cmi({"U0"}, {"U1", "S1"});
  v["v10"] = cmi({"U2", "S2"}, {"U0", "Y2"});
  v["v11"] = cmi({"U0", "U2", "S2"}, {"Y2"}) + cmi({"U0"}, {"U2", "S2"});
  return v;
}

std::map<std::string, InfoExpression> expand_v_definitions(const GroundSet& ground) {
  for (const char* name : {"U0", "U1", "U2", "S1", "S2", "Y1", "Y2"}) {
    if (!ground.contains(name)) {
      throw ProverError(std::string("ground set lacks '") + name + "' needed by the v definitions");
    }
  }
  return v_definitions();
}

}  // namespace csbc::itp
