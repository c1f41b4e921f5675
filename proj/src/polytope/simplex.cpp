#include "csbc/polytope/simplex.hpp"

#include <limits>
#include <optional>

#include "csbc/polytope/lin_system.hpp"

namespace csbc::polytope {

namespace {

/// Dense tableau over original + artificial columns; B^{-1}A kept explicitly.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b)
      : m_(b.size()), n_(m_ ? a.front().size() : 0), t_(m_), rhs_(b), sign_(m_, 1), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i].size() != n_) throw PolytopeError("ragged constraint matrix");
      t_[i].assign(n_ + m_, Rational(0));
      const bool flip = rhs_[i] < 0;
      sign_[i] = flip ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) {
        if (a[i][j] != 0) t_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
      }
      if (flip) rhs_[i] = -rhs_[i];
      t_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  std::size_t rows() const { return m_; }
  std::size_t original_columns() const { return n_; }

  /// Sets cost over all n+m columns and recomputes reduced costs.
  void set_cost(std::vector<Rational> cost) {
    cost_ = std::move(cost);
    reduced_ = cost_;
    objective_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      objective_ += cb * rhs_[i];
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (t_[i][j] != 0) reduced_[j] -= cb * t_[i][j];
      }
    }
  }

  /// Runs primal simplex over columns [0, allowed). Returns false if unbounded.
  /// Dantzig pricing with a lexicographic ratio test, which rules out cycling.
  bool optimize(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (reduced_[j] >= 0) continue;
        if (!enter || reduced_[j] < reduced_[*enter]) enter = j;
      }
      if (!enter) return true;
      const std::size_t q = *enter;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][q] <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][q];
        if (!leave || ratio < best || (ratio == best && lex_less(i, *leave, q))) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) {
        unbounded_column_ = q;
        return false;
      }
      pivot(*leave, q);
    }
  }

  /// Compares rows of B^{-1} scaled by the pivot column entry.
  bool lex_less(std::size_t a, std::size_t b, std::size_t q) const {
    for (std::size_t k = n_; k < n_ + m_; ++k) {
      const Rational& x = t_[a][k];
      const Rational& y = t_[b][k];
      if (x == 0 && y == 0) continue;
      const Rational lhs = x * t_[b][q];
      const Rational rhs = y * t_[a][q];
      if (lhs != rhs) return lhs < rhs;
    }
    return false;
  }

  void pivot(std::size_t r, std::size_t q) {
    const std::size_t width = n_ + m_;
    const Rational inv = 1 / t_[r][q];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width; ++j) {
      if (t_[r][j] != 0) {
        t_[r][j] *= inv;
        nz.push_back(j);
      }
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_[i][q] == 0) continue;
      const Rational f = t_[i][q];
      for (std::size_t j : nz) t_[i][j] -= f * t_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (reduced_[q] != 0) {
      const Rational f = reduced_[q];
      for (std::size_t j : nz) reduced_[j] -= f * t_[r][j];
      objective_ += f * rhs_[r];
    }
    basis_[r] = q;
  }

  /// Pivots zero-level artificial variables out of the basis where possible.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  const Rational& objective() const { return objective_; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  /// Duals of the original (unflipped) rows: y_i = sign_i * (c_art_i - d_art_i).
  std::vector<Rational> duals() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational yi = cost_[n_ + i] - reduced_[n_ + i];
      y[i] = sign_[i] < 0 ? Rational(-yi) : yi;
    }
    return y;
  }

 private:
  std::size_t m_, n_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_, reduced_;
  Rational objective_;
  std::size_t unbounded_column_ = 0;
};

}  // namespace

LpSolution solve_standard_form(const std::vector<std::vector<Rational>>& a,
                               const std::vector<Rational>& b, const std::vector<Rational>& c) {
  if (a.size() != b.size()) throw PolytopeError("row count mismatch");
  const std::size_t n = c.size();
  LpSolution sol;
  if (b.empty()) {
    // No rows: x = 0 is feasible; unbounded iff some cost is negative.
    sol.x.assign(n, Rational(0));
    for (const auto& cj : c) {
      if (cj < 0) {
        sol.status = LpStatus::Unbounded;
        return sol;
      }
    }
    sol.status = LpStatus::Optimal;
    return sol;
  }
  Tableau tab(a, b);
  if (tab.original_columns() != n) throw PolytopeError("cost length mismatch");
  const std::size_t m = b.size();

  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tab.set_cost(phase1);
  tab.optimize(n + m);
  if (tab.objective() > 0) {
    sol.status = LpStatus::Infeasible;
    sol.farkas = tab.duals();
    for (auto& y : sol.farkas) y = -y;
    return sol;
  }
  tab.drive_out_artificials();

  std::vector<Rational> phase2(n + m, Rational(0));
  bool trivial = true;
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = c[j];
    if (c[j] != 0) trivial = false;
  }
  tab.set_cost(phase2);
  if (!trivial && !tab.optimize(n)) {
    sol.status = LpStatus::Unbounded;
    sol.x = tab.primal();
    return sol;
  }
  sol.status = LpStatus::Optimal;
  sol.x = tab.primal();
  sol.objective = tab.objective();
  sol.dual = tab.duals();
  return sol;
}

LpSolution solve_lp(const LpProblem& p) {
  if (p.nonneg.size() != p.num_vars || p.cost.size() != p.num_vars) {
    throw PolytopeError("LP dimension mismatch");
  }
  // Columns: one per nonneg variable, two (x+, x-) per free variable, one slack per inequality.
  std::vector<std::size_t> plus(p.num_vars), minus(p.num_vars, std::numeric_limits<std::size_t>::max());
  std::size_t cols = 0;
  for (std::size_t v = 0; v < p.num_vars; ++v) {
    plus[v] = cols++;
    if (!p.nonneg[v]) minus[v] = cols++;
  }
  std::vector<std::size_t> slack(p.rows.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (!p.rows[i].equality) slack[i] = cols++;
  }
  std::vector<std::vector<Rational>> a(p.rows.size(), std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(p.rows.size());
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto& row = p.rows[i];
    if (row.coeffs.size() != p.num_vars) throw PolytopeError("LP row length mismatch");
    for (std::size_t v = 0; v < p.num_vars; ++v) {
      if (row.coeffs[v] == 0) continue;
      a[i][plus[v]] = row.coeffs[v];
      if (!p.nonneg[v]) a[i][minus[v]] = -row.coeffs[v];
    }
    if (!row.equality) a[i][slack[i]] = 1;
    b[i] = row.rhs;
  }
  std::vector<Rational> c(cols, Rational(0));
  for (std::size_t v = 0; v < p.num_vars; ++v) {
    c[plus[v]] = p.cost[v];
    if (!p.nonneg[v]) c[minus[v]] = -p.cost[v];
  }
  LpSolution std_sol = solve_standard_form(a, b, c);
  LpSolution sol;
  sol.status = std_sol.status;
  sol.objective = std_sol.objective;
  sol.dual = std::move(std_sol.dual);
  sol.farkas = std::move(std_sol.farkas);
  if (!std_sol.x.empty()) {
    sol.x.assign(p.num_vars, Rational(0));
    for (std::size_t v = 0; v < p.num_vars; ++v) {
      sol.x[v] = std_sol.x[plus[v]];
      if (!p.nonneg[v]) sol.x[v] -= std_sol.x[minus[v]];
    }
  }
  return sol;
}

}  // namespace csbc::polytope
