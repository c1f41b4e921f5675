#include "csbc/regions/specializations.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace csbc::regions {

namespace {

using measures::VarSet;

InfoExpression H(const VarSet& a, const VarSet& given = {}) { return InfoExpression::entropy(a, given); }

InfoExpression I(const VarSet& a, const VarSet& b, const VarSet& given = {}) {
  return InfoExpression::mutual_information(a, b, given);
}

double mi_xy(const std::vector<double>& p_x, const std::vector<std::vector<double>>& w) {
  std::vector<double> p_y(w.front().size(), 0.0);
  for (std::size_t x = 0; x < p_x.size(); ++x) {
    for (std::size_t y = 0; y < p_y.size(); ++y) p_y[y] += p_x[x] * w[x][y];
  }
  double total = 0;
  for (std::size_t x = 0; x < p_x.size(); ++x) {
    for (std::size_t y = 0; y < p_y.size(); ++y) {
      const double joint = p_x[x] * w[x][y];
      if (joint > 0) total += joint * std::log2(w[x][y] / p_y[y]);
    }
  }
  return total;
}

/// Marginal transition matrices p(y1|x), p(y2|x).
std::pair<std::vector<std::vector<double>>, std::vector<std::vector<double>>> marginals(const ConditionalPmf& ch) {
  const std::size_t nx = ch.given.at(0).alphabet_size;
  const std::size_t n1 = ch.outcome.at(0).alphabet_size, n2 = ch.outcome.at(1).alphabet_size;
  std::vector<std::vector<double>> w1(nx, std::vector<double>(n1, 0.0)), w2(nx, std::vector<double>(n2, 0.0));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t a = 0; a < n1; ++a) {
      for (std::size_t b = 0; b < n2; ++b) {
        const double p = ch.mass[(x * n1 + a) * n2 + b];
        w1[x][a] += p;
        w2[x][b] += p;
      }
    }
  }
  return {w1, w2};
}

void compositions(std::size_t parts, std::size_t total, std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    visit(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(parts, total - k, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

JointPmf compose_channel(const ConditionalPmf& channel, const ChannelAux& aux) {
  const auto with_x = measures::append_function(aux.u_pmf, aux.x_map);
  return measures::extend(with_x, channel);
}

RegionReport specialize_marton(const ConditionalPmf& channel, const ChannelAux& aux, const RateTriple& rates) {
  const auto pmf = compose_channel(channel, aux);
  measures::EntropyTable t(pmf);
  const double a1 = t.eval(I({"U0", "U1"}, {"Y1"}));
  const double a2 = t.eval(I({"U0", "U2"}, {"Y2"}));
  const double cross = t.eval(I({"U1"}, {"U2"}, {"U0"}));
  const double b2 = t.eval(I({"U2"}, {"Y2"}, {"U0"}));
  const double b1 = t.eval(I({"U1"}, {"Y1"}, {"U0"}));
  const auto& [r0, r1, r2] = rates;
  RegionReport report;
  report.rows.push_back(make_row("marton1", r0 + r1, a1));
  report.rows.push_back(make_row("marton2", r0 + r2, a2));
  report.rows.push_back(make_row("marton3", r0 + r1 + r2, a1 + b2 - cross));
  report.rows.push_back(make_row("marton4", r0 + r1 + r2, b1 + a2 - cross));
  report.rows.push_back(make_row("marton5", 2 * r0 + r1 + r2, a1 + a2 - cross));
  return report;
}

MartonConstruction marton_construction(const ConditionalPmf& channel, const ChannelAux& aux, std::size_t m0,
                                       std::size_t m1, std::size_t m2, bool u0_carries_w0) {
  const std::size_t s1 = m0 * m1, s2 = m0 * m2;
  std::vector<double> mass(s1 * s2, 0.0);
  const double p = 1.0 / static_cast<double>(m0 * m1 * m2);
  for (std::size_t w0 = 0; w0 < m0; ++w0) {
    for (std::size_t w1 = 0; w1 < m1; ++w1) {
      for (std::size_t w2 = 0; w2 < m2; ++w2) mass[(w0 * m1 + w1) * s2 + w0 * m2 + w2] = p;
    }
  }
  ScenarioSpec scenario{make_source(s1, s2, std::move(mass)), channel};
  const auto& vars = aux.u_pmf.variables();
  if (vars.size() != 3 || vars[0].name != "U0" || vars[1].name != "U1" || vars[2].name != "U2") {
    throw RegionError("channel auxiliaries must be over (U0,U1,U2)");
  }
  const std::size_t u0 = vars[0].alphabet_size, u1 = vars[1].alphabet_size, u2 = vars[2].alphabet_size;
  const std::size_t k = u0_carries_w0 ? m0 : 1;
  const std::size_t nu = u0 * k * u1 * u2, rest = u1 * u2;
  std::vector<double> aux_mass(s1 * s2 * nu, 0.0);
  std::vector<std::size_t> table(s1 * s2 * nu, 0);
  for (std::size_t a = 0; a < s1; ++a) {
    // Zero-probability pairs use the W0 of S1 so every slice stays normalized.
    const std::size_t w0 = u0_carries_w0 ? a / m1 : 0;
    for (std::size_t b = 0; b < s2; ++b) {
      const std::size_t base = (a * s2 + b) * nu;
      for (std::size_t c = 0; c < u0 * k; ++c) {
        for (std::size_t r = 0; r < rest; ++r) {
          const std::size_t old = (c / k) * rest + r;
          table[base + c * rest + r] = aux.x_map.table[old];
          if (c % k == w0) aux_mass[base + c * rest + r] = aux.u_pmf.mass()[old];
        }
      }
    }
  }
  auto spec = make_aux(s1, s2, u0 * k, u1, u2, std::move(aux_mass), scenario.x_size(), std::move(table));
  return {std::move(scenario), std::move(spec),
          {std::log2(static_cast<double>(m0)), std::log2(static_cast<double>(m1)), std::log2(static_cast<double>(m2))}};
}

GrayWynerReport specialize_gray_wyner(const JointPmf& source, const ConditionalPmf& v_cond, const RateTriple& links) {
  const auto pmf = measures::extend(source, v_cond);
  measures::EntropyTable t(pmf);
  const double common = t.eval(I({"S1", "S2"}, {"V"}));
  const double h1 = t.eval(H({"S1"}, {"V"}));
  const double h2 = t.eval(H({"S2"}, {"V"}));
  const auto& [r0, r1, r2] = links;
  GrayWynerReport out;
  out.rows.rows.push_back(make_row("gw1", common + h1, r0 + r1));
  out.rows.rows.push_back(make_row("gw2", common + h2, r0 + r2));
  out.rows.rows.push_back(make_row("gw3", common + h1 + h2, r0 + r1 + r2));
  out.rows.rows.push_back(make_row("gw4", 2 * common + h1 + h2, 2 * r0 + r1 + r2));
  out.canonical.rows.push_back(make_row("gw.r0", common, r0));
  out.canonical.rows.push_back(make_row("gw.r1", h1, r1));
  out.canonical.rows.push_back(make_row("gw.r2", h2, r2));
  return out;
}

GrayWynerConstruction gray_wyner_construction(const JointPmf& source, const ConditionalPmf& v_cond, std::size_t x0,
                                              std::size_t x1, std::size_t x2) {
  if (v_cond.outcome.size() != 1 || v_cond.outcome[0].name != "V") throw RegionError("v_cond must be p(V|S1,S2)");
  v_cond.validate();
  const std::size_t nv = v_cond.outcome[0].alphabet_size;
  const std::size_t nx = x0 * x1 * x2;
  ConditionalPmf channel{{{"X", nx}}, {{"Y1", x0 * x1}, {"Y2", x0 * x2}}, std::vector<double>(nx * x0 * x1 * x0 * x2, 0.0)};
  for (std::size_t a = 0; a < x0; ++a) {
    for (std::size_t b = 0; b < x1; ++b) {
      for (std::size_t c = 0; c < x2; ++c) {
        const std::size_t x = (a * x1 + b) * x2 + c;
        channel.mass[(x * x0 * x1 + a * x1 + b) * x0 * x2 + a * x2 + c] = 1.0;
      }
    }
  }
  const std::size_t s1 = source.variable("S1").alphabet_size, s2 = source.variable("S2").alphabet_size;
  const std::size_t u0 = x0 * nv;
  std::vector<double> mass;
  std::vector<std::size_t> table;
  const double link_p = 1.0 / static_cast<double>(nx);
  for (std::size_t s = 0; s < s1 * s2; ++s) {
    for (std::size_t a0 = 0; a0 < u0; ++a0) {
      const std::size_t a = a0 / nv, v = a0 % nv;
      for (std::size_t b = 0; b < x1; ++b) {
        for (std::size_t c = 0; c < x2; ++c) {
          mass.push_back(link_p * v_cond.mass[s * nv + v]);
          table.push_back((a * x1 + b) * x2 + c);
        }
      }
    }
  }
  ScenarioSpec scenario{source, channel};
  auto aux = make_aux(s1, s2, u0, x1, x2, std::move(mass), nx, std::move(table));
  return {std::move(scenario), std::move(aux),
          {std::log2(static_cast<double>(x0)), std::log2(static_cast<double>(x1)), std::log2(static_cast<double>(x2))}};
}

RegionReport specialize_degraded(const ScenarioSpec& scenario, const JointPmf& ux_pmf) {
  scenario.validate();
  const auto& vars = ux_pmf.variables();
  if (vars.size() != 2 || vars[0].name != "U" || vars[1].name != "X") throw RegionError("p(u,x) must be over (U,X)");
  const auto channel_part = measures::extend(ux_pmf, scenario.channel);
  measures::EntropyTable t(channel_part);
  measures::EntropyTable s(scenario.source);
  const double h2 = s.eval(H({"S2"}));
  const double h12 = s.eval(H({"S1", "S2"}));
  const double iu = t.eval(I({"U"}, {"Y2"}));
  RegionReport report;
  report.rows.push_back(make_row("k1.1", h2, iu));
  report.rows.push_back(make_row("k1.2", h12, iu + t.eval(I({"X"}, {"Y1"}, {"U"}))));
  report.rows.push_back(make_row("k1.3", h12, t.eval(I({"X"}, {"Y1"}))));
  return report;
}

DegradedConstruction degraded_construction(const ScenarioSpec& scenario, const JointPmf& ux_pmf) {
  scenario.validate();
  const std::size_t s1 = scenario.source.variable("S1").alphabet_size;
  const std::size_t s2 = scenario.source.variable("S2").alphabet_size;
  const std::size_t nu = ux_pmf.variable("U").alphabet_size, nx = ux_pmf.variable("X").alphabet_size;
  if (nx != scenario.x_size()) throw RegionError("p(u,x) input alphabet differs from the channel");
  std::vector<double> mass(s1 * s2 * s2, 0.0);
  for (std::size_t a = 0; a < s1; ++a) {
    for (std::size_t b = 0; b < s2; ++b) mass[(a * s2 + b) * s2 + b] = scenario.source.mass()[a * s2 + b];
  }
  ScenarioSpec transformed{make_source(s1 * s2, s2, std::move(mass)), scenario.channel};
  // U0 = (U, S2) with symbol u*|S2| + s2; U1 = X; U2 constant.
  const std::size_t u0 = nu * s2;
  std::vector<double> aux_mass;
  std::vector<std::size_t> table;
  for (std::size_t t1 = 0; t1 < s1 * s2; ++t1) {
    for (std::size_t t2 = 0; t2 < s2; ++t2) {
      for (std::size_t a = 0; a < u0; ++a) {
        for (std::size_t x = 0; x < nx; ++x) {
          const std::size_t u = a / s2, s = a % s2;
          const std::size_t cell[2] = {u, x};
          aux_mass.push_back(s == t2 ? ux_pmf.at(cell) : 0.0);
          table.push_back(x);
        }
      }
    }
  }
  auto aux = make_aux(s1 * s2, s2, u0, nx, 1, std::move(aux_mass), nx, std::move(table));
  return {std::move(transformed), std::move(aux)};
}

double capability_gap(const ConditionalPmf& channel, const std::vector<double>& p_x) {
  const auto [w1, w2] = marginals(channel);
  return mi_xy(p_x, w1) - mi_xy(p_x, w2);
}

MoreCapableResult check_more_capable(const ConditionalPmf& channel, std::size_t resolution, double tol) {
  channel.validate();
  if (resolution == 0) throw RegionError("grid resolution must be positive");
  const auto [w1, w2] = marginals(channel);
  const std::size_t nx = w1.size();
  MoreCapableResult result;
  result.worst_gap = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> cur;
  compositions(nx, resolution, cur, [&](const std::vector<std::size_t>& k) {
    std::vector<double> p(nx);
    for (std::size_t i = 0; i < nx; ++i) p[i] = static_cast<double>(k[i]) / static_cast<double>(resolution);
    const double gap = mi_xy(p, w1) - mi_xy(p, w2);
    ++result.grid_points;
    if (gap < result.worst_gap) {
      result.worst_gap = gap;
      result.worst_input = p;
    }
  });
  // Local refinement: move mass between pairs of symbols while it lowers the gap.
  double step = 1.0 / static_cast<double>(resolution);
  auto p = result.worst_input;
  for (int round = 0; round < 40; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < nx; ++i) {
      for (std::size_t j = 0; j < nx; ++j) {
        if (i == j || p[i] <= 0) continue;
        auto q = p;
        const double d = std::min(step, q[i]);
        q[i] -= d;
        q[j] += d;
        const double gap = mi_xy(q, w1) - mi_xy(q, w2);
        if (gap < result.worst_gap) {
          result.worst_gap = gap;
          p = q;
          improved = true;
        }
      }
    }
    if (!improved) step /= 2;
  }
  result.worst_input = p;
  result.more_capable = result.worst_gap >= -tol;
  return result;
}

}  // namespace csbc::regions
