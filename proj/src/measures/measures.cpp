#include "csbc/measures/measures.hpp"

#include <cmath>
#include <numeric>

namespace csbc::measures {

namespace {

void require_known(const JointPmf& pmf, const VarSet& names) {
  for (const auto& n : names) pmf.index_of(n);
}

std::vector<double> marginal_by_mask(const JointPmf& pmf, std::uint64_t mask) {
  const auto& vars = pmf.variables();
  std::vector<std::size_t> kept;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (mask >> i & 1u) {
      kept.push_back(i);
      cells *= vars[i].alphabet_size;
    }
  }
  std::vector<std::size_t> out_stride(kept.size(), 1);
  for (std::size_t k = kept.size(); k-- > 1;) {
    out_stride[k - 1] = out_stride[k] * vars[kept[k]].alphabet_size;
  }
  std::vector<double> out(cells, 0.0);
  const auto mass = pmf.mass();
  for (std::size_t cell = 0; cell < mass.size(); ++cell) {
    if (mass[cell] == 0.0) continue;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) idx += pmf.symbol(cell, kept[k]) * out_stride[k];
    out[idx] += mass[cell];
  }
  return out;
}

double plogp_sum(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

JointPmf marginalize(const JointPmf& pmf, const VarSet& keep) {
  require_known(pmf, keep);
  const std::uint64_t mask = pmf.mask_of(keep);
  std::vector<FiniteVariable> vars;
  for (std::size_t i = 0; i < pmf.variable_count(); ++i) {
    if (mask >> i & 1u) vars.push_back(pmf.variables()[i]);
  }
  auto mass = marginal_by_mask(pmf, mask);
  // Re-normalize the rounding drift of the summation; the true marginal sums to 1.
  const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
  for (double& p : mass) p /= total;
  return JointPmf(std::move(vars), std::move(mass));
}

double EntropyTable::by_mask(std::uint64_t mask) const {
  if (mask == 0) return 0.0;
  if (auto it = cache_.find(mask); it != cache_.end()) return it->second;
  const double h = plogp_sum(marginal_by_mask(*pmf_, mask));
  cache_.emplace(mask, h);
  return h;
}

double EntropyTable::eval(const InfoExpression& expr) const {
  double total = 0.0;
  for (const auto& [subset, c] : expr.terms()) {
    total += c.convert_to<double>() * subset_entropy(subset);
  }
  return total;
}

double entropy(const JointPmf& pmf, const VarSet& a, const VarSet& given) {
  if (a.empty()) throw MeasureError("entropy of an empty variable set");
  require_known(pmf, a);
  require_known(pmf, given);
  EntropyTable table(pmf);
  const std::uint64_t g = pmf.mask_of(given);
  return table.by_mask(pmf.mask_of(a) | g) - table.by_mask(g);
}

double mutual_information(const JointPmf& pmf, const VarSet& a, const VarSet& b,
                          const VarSet& given) {
  if (a.empty() || b.empty()) throw MeasureError("mutual information needs nonempty arguments");
  return entropy(pmf, a, given) - entropy(pmf, a, varset_union(b, given));
}

double eval_expression(const InfoExpression& expr, const JointPmf& pmf) {
  for (const auto& name : expr.variables()) {
    if (!pmf.has(name)) throw MeasureError("expression variable '" + name + "' is not bound");
  }
  return EntropyTable(pmf).eval(expr);
}

CommonPart common_part(const JointPmf& source) {
  if (source.variable_count() != 2) throw MeasureError("common part needs a two-variable source");
  const std::size_t n1 = source.variables()[0].alphabet_size;
  const std::size_t n2 = source.variables()[1].alphabet_size;
  // Union-find over n1 + n2 nodes; s2 symbols are offset by n1.
  std::vector<std::size_t> parent(n1 + n2);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> in1(n1, false), in2(n2, false);
  bool any = false;
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      if (source.mass()[a * n2 + b] <= 0.0) continue;
      any = in1[a] = in2[b] = true;
      std::size_t ra = find(a), rb = find(n1 + b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  if (!any) throw MeasureError("zero-mass source");
  CommonPart cp;
  cp.f.assign(n1, std::nullopt);
  cp.g.assign(n2, std::nullopt);
  std::vector<std::optional<std::size_t>> label(n1 + n2);
  for (std::size_t a = 0; a < n1; ++a) {
    if (!in1[a]) continue;
    auto& l = label[find(a)];
    if (!l) l = cp.size++;
    cp.f[a] = *l;
  }
  for (std::size_t b = 0; b < n2; ++b) {
    if (in2[b]) cp.g[b] = label[find(n1 + b)];
  }
  return cp;
}

JointPmf adjoin_independent(const JointPmf& pmf, const FiniteVariable& w,
                            const std::vector<double>& w_dist) {
  if (pmf.has(w.name)) throw MeasureError("variable '" + w.name + "' already present");
  ConditionalPmf cond{{}, {w}, w_dist};
  cond.validate();
  return extend(pmf, cond);
}

JointPmf extend(const JointPmf& pmf, const ConditionalPmf& conditional) {
  conditional.validate();
  std::vector<std::size_t> given_idx;
  for (const auto& g : conditional.given) {
    const std::size_t i = pmf.index_of(g.name);
    if (pmf.variables()[i].alphabet_size != g.alphabet_size) {
      throw MeasureError("dimension mismatch for conditioning variable '" + g.name + "'");
    }
    given_idx.push_back(i);
  }
  auto vars = pmf.variables();
  for (const auto& o : conditional.outcome) {
    if (pmf.has(o.name)) throw MeasureError("variable '" + o.name + "' already present");
    vars.push_back(o);
  }
  const std::size_t out_cells = conditional.outcome_cells();
  std::vector<double> mass(pmf.cell_count() * out_cells, 0.0);
  for (std::size_t cell = 0; cell < pmf.cell_count(); ++cell) {
    const double p = pmf.mass()[cell];
    if (p == 0.0) continue;
    std::size_t row = 0;
    for (std::size_t k = 0; k < given_idx.size(); ++k) {
      row = row * conditional.given[k].alphabet_size + pmf.symbol(cell, given_idx[k]);
    }
    for (std::size_t o = 0; o < out_cells; ++o) {
      mass[cell * out_cells + o] = p * conditional.mass[row * out_cells + o];
    }
  }
  return JointPmf(std::move(vars), std::move(mass));
}

JointPmf append_function(const JointPmf& pmf, const DeterministicMap& map) {
  map.validate();
  ConditionalPmf cond;
  cond.given = map.inputs;
  cond.outcome = {map.output};
  const std::size_t k = map.output.alphabet_size;
  cond.mass.assign(map.table.size() * k, 0.0);
  for (std::size_t row = 0; row < map.table.size(); ++row) cond.mass[row * k + map.table[row]] = 1.0;
  return extend(pmf, cond);
}

JointPmf compose_scenario(const JointPmf& source, const ConditionalPmf& aux,
                          const DeterministicMap& x_map, const ConditionalPmf& channel) {
  if (aux.given != source.variables()) {
    throw MeasureError("auxiliary conditional must be conditioned on exactly the source variables");
  }
  if (channel.given.size() != 1 || !(channel.given[0] == x_map.output)) {
    throw MeasureError("channel must be conditioned on the channel input variable");
  }
  auto with_aux = extend(source, aux);
  if (x_map.inputs != with_aux.variables()) {
    throw MeasureError("x map must take (sources, auxiliaries) in order");
  }
  return extend(append_function(with_aux, x_map), channel);
}

}  // namespace csbc::measures
