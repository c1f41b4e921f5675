#include "csbc/simcode/codebook.hpp"

#include <cmath>

namespace csbc::simcode {

namespace {

enum Role : std::uint64_t { kRoleU0 = 0x7530, kRoleU1 = 0x7531, kRoleU2 = 0x7532 };

/// Cumulative p(target | given...) rows from a marginal over (given..., target).
/// Rows with zero mass fall back to uniform.
std::vector<double> conditional_cdf(const JointPmf& composed, const measures::VarSet& given, const std::string& target) {
  measures::VarSet keep = given;
  keep.push_back(target);
  const JointPmf marg = measures::marginalize(composed, keep);
  // marginalize keeps the composed order, which lists the conditioning variables first here.
  const std::size_t t = marg.index_of(target);
  if (t != marg.variable_count() - 1) throw SimError("conditioning order mismatch");
  const std::size_t k = marg.variables().back().alphabet_size;
  const std::size_t rows = marg.cell_count() / k;
  std::vector<double> cdf(marg.cell_count());
  for (std::size_t r = 0; r < rows; ++r) {
    double total = 0;
    for (std::size_t j = 0; j < k; ++j) total += marg.mass()[r * k + j];
    double acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
      acc += total > 0 ? marg.mass()[r * k + j] / total : 1.0 / static_cast<double>(k);
      cdf[r * k + j] = acc;
    }
  }
  return cdf;
}

}  // namespace

const char* to_string(Scheme scheme) { return scheme == Scheme::Plain ? "plain" : "superposition"; }

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) { return mix64(h ^ mix64(v)); }

std::uint64_t hash_sequence(const Sequence& s) {
  std::uint64_t h = mix64(s.size());
  for (auto x : s) h = hash_combine(h, x);
  return h;
}

std::uint64_t message_count(double rate, std::size_t n) {
  if (!(rate >= 0) || !std::isfinite(rate)) throw SimError("rates must be finite and nonnegative");
  const double bits = rate * static_cast<double>(n);
  if (bits >= 63) throw BudgetExceeded("message count 2^" + std::to_string(bits) + " does not fit");
  return static_cast<std::uint64_t>(std::floor(std::exp2(bits)));
}

CodebookEnsemble::CodebookEnsemble(const JointPmf& composed, RateTriple rates, Scheme scheme, std::uint64_t seed,
                                   std::size_t n)
    : scheme_(scheme), seed_(seed), n_(n), rates_(rates) {
  if (n == 0) throw SimError("blocklength must be positive");
  for (const char* v : {"S1", "S2", "U0", "U1", "U2"}) {
    if (!composed.has(v)) throw SimError(std::string("composed pmf lacks ") + v);
  }
  counts_ = {message_count(rates.r0, n), message_count(rates.r1, n), message_count(rates.r2, n)};
  for (const char* v : {"U0", "U1", "U2"}) u_sizes_.push_back(composed.variable(v).alphabet_size);
  for (const char* v : {"S1", "S2"}) s_sizes_.push_back(composed.variable(v).alphabet_size);
  for (auto a : u_sizes_) {
    if (a > 255) throw SimError("auxiliary alphabet too large for simulation");
  }
  cdf_u0_ = conditional_cdf(composed, {}, "U0");
  const bool sup = scheme == Scheme::Superposition;
  // Composed order is S1,S2,U0,U1,U2 so the conditioning rows are (s) or (s,u0).
  cdf_uk_[0] = conditional_cdf(composed, sup ? measures::VarSet{"S1", "U0"} : measures::VarSet{"S1"}, "U1");
  cdf_uk_[1] = conditional_cdf(composed, sup ? measures::VarSet{"S2", "U0"} : measures::VarSet{"S2"}, "U2");
}

std::uint8_t CodebookEnsemble::draw(const std::vector<double>& cdf, std::size_t size, std::size_t row,
                                    std::uint64_t bits) {
  const double u = unit_interval(bits);
  const double* c = cdf.data() + row * size;
  for (std::size_t j = 0; j + 1 < size; ++j) {
    if (u < c[j]) return static_cast<std::uint8_t>(j);
  }
  return static_cast<std::uint8_t>(size - 1);
}

std::uint8_t CodebookEnsemble::u0_at(std::uint64_t m0, std::size_t i) const {
  const std::uint64_t bits = hash_combine(hash_combine(hash_combine(seed_, kRoleU0), m0), i);
  return draw(cdf_u0_, u_sizes_[0], 0, bits);
}

Sequence CodebookEnsemble::u0(std::uint64_t m0) const {
  Sequence out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = u0_at(m0, i);
  return out;
}

std::uint64_t CodebookEnsemble::uk_key(int k, const Sequence& s, std::uint64_t m0) const {
  std::uint64_t h = hash_combine(hash_combine(seed_, k == 1 ? kRoleU1 : kRoleU2), hash_sequence(s));
  if (scheme_ == Scheme::Superposition) h = hash_combine(h, m0);
  return h;
}

std::uint8_t CodebookEnsemble::uk_at(int k, std::uint64_t key, std::uint64_t m, std::size_t i, std::uint8_t s_sym,
                                     std::uint8_t u0_sym) const {
  const std::uint64_t bits = hash_combine(hash_combine(key, m), i);
  std::size_t row = s_sym;
  if (scheme_ == Scheme::Superposition) row = row * u_sizes_[0] + u0_sym;
  return draw(cdf_uk_[k - 1], u_sizes_[static_cast<std::size_t>(k)], row, bits);
}

Sequence CodebookEnsemble::uk(int k, const Sequence& s, std::uint64_t m0, std::uint64_t m,
                              const Sequence& u0_seq) const {
  const std::uint64_t key = uk_key(k, s, m0);
  Sequence out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = uk_at(k, key, m, i, s[i], u0_seq.empty() ? 0 : u0_seq[i]);
  return out;
}

}  // namespace csbc::simcode
