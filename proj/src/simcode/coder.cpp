#include "csbc/simcode/coder.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace csbc::simcode {

namespace {

std::uint8_t draw_cell(const double* mass, std::size_t size, double u) {
  double acc = 0;
  for (std::size_t j = 0; j + 1 < size; ++j) {
    acc += mass[j];
    if (u < acc) return static_cast<std::uint8_t>(j);
  }
  // Skip trailing zero-mass symbols so rounding never picks an impossible one.
  std::size_t last = size - 1;
  while (last > 0 && mass[last] <= 0) --last;
  return static_cast<std::uint8_t>(last);
}

double next_unit(std::mt19937_64& rng) { return unit_interval(rng()); }

JointPmf marginal(const JointPmf& pmf, std::initializer_list<const char*> names) {
  measures::VarSet keep;
  for (auto n : names) keep.emplace_back(n);
  return measures::marginalize(pmf, keep);
}

}  // namespace

const char* to_string(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::Decoded: return "decoded";
    case DecodeStatus::NoneTypical: return "none_typical";
    case DecodeStatus::Ambiguous: return "ambiguous";
  }
  return "?";
}

const char* to_string(ErrorEvent event) {
  switch (event) {
    case ErrorEvent::Correct: return "correct";
    case ErrorEvent::E1: return "E1";
    case ErrorEvent::E2: return "E2";
    case ErrorEvent::E3: return "E3";
  }
  return "?";
}

std::pair<Sequence, Sequence> sample_source(const JointPmf& source, std::size_t n, std::uint64_t seed) {
  if (source.variable_count() != 2) throw SimError("source must have two variables");
  const std::size_t b = source.variables()[1].alphabet_size;
  std::mt19937_64 rng(seed);
  std::pair<Sequence, Sequence> out{Sequence(n), Sequence(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = draw_cell(source.mass().data(), source.cell_count(), next_unit(rng));
    out.first[i] = static_cast<std::uint8_t>(c / b);
    out.second[i] = static_cast<std::uint8_t>(c % b);
  }
  return out;
}

std::pair<Sequence, Sequence> transmit(const Sequence& x, const measures::ConditionalPmf& channel,
                                       std::uint64_t noise_seed) {
  if (channel.given.size() != 1 || channel.outcome.size() != 2) throw SimError("channel must be p(y1,y2|x)");
  const std::size_t nx = channel.given[0].alphabet_size;
  const std::size_t width = channel.outcome_cells();
  const std::size_t b = channel.outcome[1].alphabet_size;
  std::mt19937_64 rng(noise_seed);
  std::pair<Sequence, Sequence> out{Sequence(x.size()), Sequence(x.size())};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= nx) throw SimError("channel input outside X alphabet");
    const std::size_t c = draw_cell(channel.mass.data() + x[i] * width, width, next_unit(rng));
    out.first[i] = static_cast<std::uint8_t>(c / b);
    out.second[i] = static_cast<std::uint8_t>(c % b);
  }
  return out;
}

SchemeCoder::SchemeCoder(const ScenarioSpec& scenario, const AuxiliarySpec& aux, const TypicalityParams& params)
    : scenario_(scenario),
      aux_(aux),
      params_(params),
      composed_(regions::compose(scenario, aux)),
      source_check_(marginal(composed_, {"S1", "S2"}), params.eps_prime, params.n),
      enc0_check_(marginal(composed_, {"S1", "S2", "U0"}), params.eps_prime, params.n),
      enc1_check_(marginal(composed_, {"S1", "S2", "U0", "U1"}), params.eps_prime, params.n),
      enc2_check_(marginal(composed_, {"S1", "S2", "U0", "U1", "U2"}), params.eps_prime, params.n) {
  params.validate();
  for (const auto& v : composed_.variables()) {
    if (v.alphabet_size > 255) throw SimError("alphabet of " + v.name + " too large for simulation");
  }
  for (int k = 1; k <= 2; ++k) {
    const std::string s = "S" + std::to_string(k), u = "U" + std::to_string(k), y = "Y" + std::to_string(k);
    JointPmf full = measures::marginalize(composed_, {s, "U0", u, y});
    TypicalityChecker full_check(full, params.eps, params.n);
    sides_.push_back(Side{std::move(full), std::move(full_check),
                          TypicalityChecker(measures::marginalize(composed_, {"U0", y}), params.eps, params.n),
                          TypicalityChecker(measures::marginalize(composed_, {s, "U0", y}), params.eps, params.n)});
  }
}

const SchemeCoder::Side& SchemeCoder::side(int k) const {
  if (k != 1 && k != 2) throw SimError("decoder index must be 1 or 2");
  return sides_[static_cast<std::size_t>(k - 1)];
}

double SchemeCoder::covering_cost(const CodebookEnsemble& ens) const {
  const double cost = static_cast<double>(ens.count(0)) * static_cast<double>(ens.count(1)) *
                      static_cast<double>(ens.count(2));
  if (cost > kCoveringBudget) {
    throw BudgetExceeded("encoder search of " + std::to_string(cost) + " triples exceeds 2^32");
  }
  return cost;
}

double SchemeCoder::decoding_cost(int k, const CodebookEnsemble& ens) const {
  const double cost = std::pow(static_cast<double>(ens.s_size(k)), static_cast<double>(params_.n)) *
                      static_cast<double>(ens.count(0)) * static_cast<double>(ens.count(k));
  if (cost > kDecodingBudget) {
    throw BudgetExceeded("decoder " + std::to_string(k) + " search of " + std::to_string(cost) +
                         " tuples exceeds 2^28");
  }
  return cost;
}

EncodeResult SchemeCoder::encode(const Sequence& s1, const Sequence& s2, const CodebookEnsemble& ens) const {
  const std::size_t n = params_.n;
  if (s1.size() != n || s2.size() != n || ens.n() != n) throw SimError("blocklength mismatch");
  EncodeResult r;
  CountState src(source_check_);
  std::uint8_t sym[5];
  for (std::size_t i = 0; i < n; ++i) {
    sym[0] = s1[i];
    sym[1] = s2[i];
    if (!src.push(source_check_.cell_of(sym))) return r;
  }
  r.source_typical = src.complete_and_typical();
  // Every marginal of a typical tuple is typical, so an atypical source admits no triple.
  if (!r.source_typical) return r;

  const bool sup = ens.scheme() == Scheme::Superposition;
  CountState c0(enc0_check_), c1(enc1_check_), c2(enc2_check_);
  Sequence u0(n), u1(n);
  const std::uint64_t key1_plain = sup ? 0 : ens.uk_key(1, s1, 0);
  const std::uint64_t key2_plain = sup ? 0 : ens.uk_key(2, s2, 0);
  for (std::uint64_t m0 = 1; m0 <= ens.count(0); ++m0) {
    c0.clear();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      sym[0] = s1[i];
      sym[1] = s2[i];
      sym[2] = u0[i] = ens.u0_at(m0, i);
      ok = c0.push(enc0_check_.cell_of(sym));
    }
    if (!ok || !c0.complete_and_typical()) continue;
    const std::uint64_t key1 = sup ? ens.uk_key(1, s1, m0) : key1_plain;
    const std::uint64_t key2 = sup ? ens.uk_key(2, s2, m0) : key2_plain;
    for (std::uint64_t m1 = 1; m1 <= ens.count(1); ++m1) {
      c1.clear();
      ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        sym[0] = s1[i];
        sym[1] = s2[i];
        sym[2] = u0[i];
        sym[3] = u1[i] = ens.uk_at(1, key1, m1, i, s1[i], u0[i]);
        ok = c1.push(enc1_check_.cell_of(sym));
      }
      if (!ok || !c1.complete_and_typical()) continue;
      for (std::uint64_t m2 = 1; m2 <= ens.count(2); ++m2) {
        c2.clear();
        ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          sym[0] = s1[i];
          sym[1] = s2[i];
          sym[2] = u0[i];
          sym[3] = u1[i];
          sym[4] = ens.uk_at(2, key2, m2, i, s2[i], u0[i]);
          ok = c2.push(enc2_check_.cell_of(sym));
        }
        if (ok && c2.complete_and_typical()) {
          r.m0 = m0;
          r.m1 = m1;
          r.m2 = m2;
          r.found = true;
          return r;
        }
      }
    }
  }
  return r;
}

Sequence SchemeCoder::channel_input(const Sequence& s1, const Sequence& s2, const EncodeResult& m,
                                    const CodebookEnsemble& ens) const {
  const Sequence u0 = ens.u0(m.m0);
  const Sequence u1 = ens.uk(1, s1, m.m0, m.m1, u0);
  const Sequence u2 = ens.uk(2, s2, m.m0, m.m2, u0);
  const std::size_t a0 = aux_.u_size(0), a1 = aux_.u_size(1), a2 = aux_.u_size(2);
  const std::size_t b = scenario_.source.variables()[1].alphabet_size;
  Sequence x(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    const std::size_t cell = (((s1[i] * b + s2[i]) * a0 + u0[i]) * a1 + u1[i]) * a2 + u2[i];
    x[i] = static_cast<std::uint8_t>(aux_.x_map.table.at(cell));
  }
  return x;
}

struct SchemeCoder::Search {
  int k;
  const Sequence& y;
  const CodebookEnsemble& ens;
  const Side& side;
  std::uint64_t m0_first, m0_last;
  const Sequence* exclude;
  std::size_t limit;
  std::uint64_t m0 = 0;
  Sequence u0, s;
  CountState su0y, full;
  std::vector<Sequence> candidates;

  bool done() const { return candidates.size() >= limit; }
};

void SchemeCoder::search(Search& ctx) const {
  const std::size_t n = params_.n;
  CountState u0y(ctx.side.u0y_check);
  ctx.u0.assign(n, 0);
  ctx.s.assign(n, 0);
  std::uint8_t sym[2];
  for (ctx.m0 = ctx.m0_first; ctx.m0 <= ctx.m0_last && !ctx.done(); ++ctx.m0) {
    u0y.clear();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      sym[0] = ctx.u0[i] = ctx.ens.u0_at(ctx.m0, i);
      sym[1] = ctx.y[i];
      ok = u0y.push(ctx.side.u0y_check.cell_of(sym));
    }
    if (!ok || !u0y.complete_and_typical()) continue;
    search_sources(ctx, 0);
  }
}

void SchemeCoder::search_sources(Search& ctx, std::size_t i) const {
  if (i == params_.n) {
    if (!ctx.su0y.complete_and_typical()) return;
    if (ctx.exclude && ctx.s == *ctx.exclude) return;
    if (std::find(ctx.candidates.begin(), ctx.candidates.end(), ctx.s) != ctx.candidates.end()) return;
    if (has_codeword(ctx)) ctx.candidates.push_back(ctx.s);
    return;
  }
  const std::size_t alphabet = ctx.ens.s_size(ctx.k);
  std::uint8_t sym[3];
  for (std::size_t a = 0; a < alphabet && !ctx.done(); ++a) {
    sym[0] = static_cast<std::uint8_t>(a);
    sym[1] = ctx.u0[i];
    sym[2] = ctx.y[i];
    if (!ctx.su0y.push(ctx.side.su0y_check.cell_of(sym))) continue;
    ctx.s[i] = sym[0];
    search_sources(ctx, i + 1);
    ctx.su0y.pop();
  }
}

bool SchemeCoder::has_codeword(Search& ctx) const {
  const std::size_t n = params_.n;
  const std::uint64_t key = ctx.ens.uk_key(ctx.k, ctx.s, ctx.m0);
  std::uint8_t sym[4];
  for (std::uint64_t m = 1; m <= ctx.ens.count(ctx.k); ++m) {
    ctx.full.clear();
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      sym[0] = ctx.s[i];
      sym[1] = ctx.u0[i];
      sym[2] = ctx.ens.uk_at(ctx.k, key, m, i, ctx.s[i], ctx.u0[i]);
      sym[3] = ctx.y[i];
      ok = ctx.full.push(ctx.side.full_check.cell_of(sym));
    }
    if (ok && ctx.full.complete_and_typical()) return true;
  }
  return false;
}

DecodeResult SchemeCoder::decode(int k, const Sequence& y, const CodebookEnsemble& ens) const {
  const Side& sd = side(k);
  if (y.size() != params_.n || ens.n() != params_.n) throw SimError("blocklength mismatch");
  decoding_cost(k, ens);
  Search ctx{k, y, ens, sd, 1, ens.count(0), nullptr, 2, 0, {}, {},
             CountState(sd.su0y_check), CountState(sd.full_check), {}};
  search(ctx);
  DecodeResult r;
  if (ctx.candidates.empty()) {
    r.status = DecodeStatus::NoneTypical;
  } else if (ctx.candidates.size() > 1) {
    r.status = DecodeStatus::Ambiguous;
  } else {
    r.status = DecodeStatus::Decoded;
    r.estimate = std::move(ctx.candidates.front());
  }
  return r;
}

DecodeResult SchemeCoder::decode_reference(int k, const Sequence& y, const CodebookEnsemble& ens) const {
  const Side& sd = side(k);
  const std::size_t n = params_.n;
  if (y.size() != n) throw SimError("blocklength mismatch");
  decoding_cost(k, ens);
  const std::size_t alphabet = ens.s_size(k);
  std::vector<Sequence> candidates;
  Sequence s(n, 0);
  while (true) {
    bool hit = false;
    for (std::uint64_t m0 = 1; m0 <= ens.count(0) && !hit; ++m0) {
      const Sequence u0 = ens.u0(m0);
      for (std::uint64_t m = 1; m <= ens.count(k) && !hit; ++m) {
        hit = is_typical({s, u0, ens.uk(k, s, m0, m, u0), y}, sd.full, params_.eps);
      }
    }
    if (hit) candidates.push_back(s);
    std::size_t i = 0;
    while (i < n && ++s[i] == alphabet) s[i++] = 0;
    if (i == n) break;
  }
  DecodeResult r;
  if (candidates.size() == 1) {
    r.status = DecodeStatus::Decoded;
    r.estimate = candidates.front();
  } else {
    r.status = candidates.empty() ? DecodeStatus::NoneTypical : DecodeStatus::Ambiguous;
  }
  return r;
}

ErrorEvent SchemeCoder::classify(int k, const Sequence& s_true, const EncodeResult& m, const Sequence& y,
                                 const DecodeResult& decoded, const CodebookEnsemble& ens) const {
  if (decoded.status == DecodeStatus::Decoded && decoded.estimate == s_true) return ErrorEvent::Correct;
  const Side& sd = side(k);
  const std::uint64_t mk = k == 1 ? m.m1 : m.m2;
  const Sequence u0 = ens.u0(m.m0);
  if (!is_typical({s_true, u0, ens.uk(k, s_true, m.m0, mk, u0), y}, sd.full, params_.eps)) return ErrorEvent::E1;
  // The truth is a candidate, so the failure is a competing sequence.
  Search ctx{k, y, ens, sd, m.m0, m.m0, &s_true, 1, 0, {}, {},
             CountState(sd.su0y_check), CountState(sd.full_check), {}};
  search(ctx);
  return ctx.candidates.empty() ? ErrorEvent::E3 : ErrorEvent::E2;
}

}  // namespace csbc::simcode
