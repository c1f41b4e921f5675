#pragma once

#include <cstdint>
#include <vector>

#include "csbc/regions/scenario.hpp"
#include "csbc/simcode/typicality.hpp"

namespace csbc::simcode {

using regions::RateTriple;

enum class Scheme { Plain, Superposition };

const char* to_string(Scheme scheme);

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);
/// Order-sensitive hash combination.
std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v);
std::uint64_t hash_sequence(const Sequence& s);
/// Uniform in [0,1) from the top 53 bits.
inline double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

/// floor(2^{nR}); throws SimError if it does not fit in 63 bits.
std::uint64_t message_count(double rate, std::size_t n);

/**
 * Lazily generated random codebooks.
 *
 * Symbol i of a codeword is drawn by inverse CDF from a hash of
 * (seed, role, conditioning key, index, i), so codewords never need to be
 * stored and any one of them can be regenerated symbol by symbol. Plain:
 * u0^n(m0) ~ p(u0), u1^n(s1^n, m1) ~ p(u1|s1), u2^n(s2^n, m2) ~ p(u2|s2).
 * Superposition: u1 and u2 additionally depend on m0 through u0^n(m0), with
 * p(u1|u0,s1) and p(u2|u0,s2). Indices are 1-based.
 */
class CodebookEnsemble {
 public:
  /// `composed` is the scenario pmf over (S1,S2,U0,U1,U2,X,Y1,Y2).
  CodebookEnsemble(const JointPmf& composed, RateTriple rates, Scheme scheme, std::uint64_t seed, std::size_t n);

  Scheme scheme() const { return scheme_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t n() const { return n_; }
  const RateTriple& rates() const { return rates_; }
  /// Message count for index i in {0,1,2}.
  std::uint64_t count(int i) const { return counts_.at(static_cast<std::size_t>(i)); }
  std::size_t u_size(int i) const { return u_sizes_.at(static_cast<std::size_t>(i)); }
  std::size_t s_size(int k) const { return s_sizes_.at(static_cast<std::size_t>(k - 1)); }

  std::uint8_t u0_at(std::uint64_t m0, std::size_t i) const;
  Sequence u0(std::uint64_t m0) const;

  /// Key shared by all u_k codewords for one source sequence (and m0 when superposed); k in {1,2}.
  std::uint64_t uk_key(int k, const Sequence& s, std::uint64_t m0) const;
  /// Symbol i of u_k^n; s_sym and u0_sym are the conditioning symbols at position i.
  std::uint8_t uk_at(int k, std::uint64_t key, std::uint64_t m, std::size_t i, std::uint8_t s_sym,
                     std::uint8_t u0_sym) const;
  Sequence uk(int k, const Sequence& s, std::uint64_t m0, std::uint64_t m, const Sequence& u0_seq) const;

 private:
  static std::uint8_t draw(const std::vector<double>& cdf, std::size_t size, std::size_t row, std::uint64_t bits);

  Scheme scheme_;
  std::uint64_t seed_;
  std::size_t n_;
  RateTriple rates_;
  std::vector<std::uint64_t> counts_;
  std::vector<std::size_t> u_sizes_, s_sizes_;
  /// Cumulative conditional distributions; row = conditioning cell.
  std::vector<double> cdf_u0_;
  std::vector<double> cdf_uk_[2];
};

}  // namespace csbc::simcode
