#pragma once

#include <cstdint>
#include <utility>

#include "csbc/simcode/codebook.hpp"

namespace csbc::simcode {

using regions::AuxiliarySpec;
using regions::ScenarioSpec;

/// Nominal per-trial work limits (candidate tuples).
inline constexpr double kDecodingBudget = 268435456.0;    // 2^28
inline constexpr double kCoveringBudget = 4294967296.0;   // 2^32

struct EncodeResult {
  std::uint64_t m0 = 1, m1 = 1, m2 = 1;
  /// A typical triple was found; otherwise (1,1,1) is the fallback.
  bool found = false;
  /// (s1^n, s2^n) is eps'-typical. When it is not, no triple can be.
  bool source_typical = false;
};

enum class DecodeStatus { Decoded, NoneTypical, Ambiguous };
const char* to_string(DecodeStatus status);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::NoneTypical;
  Sequence estimate;
};

/**
 * Error events at decoder k, checked in order:
 * E1: the true tuple (s_k, u0(m0), u_k(s_k, m_k), y_k) is not eps-typical;
 * E2: some other s~ is typical with the true u0(m0) and some u_k;
 * E3: some other s~ is typical with some m0' != m0.
 */
enum class ErrorEvent { Correct, E1, E2, E3 };
const char* to_string(ErrorEvent event);

struct DecoderOutcome {
  DecodeStatus status = DecodeStatus::NoneTypical;
  ErrorEvent event = ErrorEvent::Correct;
};

/// Draws (s1^n, s2^n) i.i.d. from the source.
std::pair<Sequence, Sequence> sample_source(const JointPmf& source, std::size_t n, std::uint64_t seed);

/// Memoryless channel p(y1,y2|x): per-symbol draws keyed by `noise_seed`.
std::pair<Sequence, Sequence> transmit(const Sequence& x, const measures::ConditionalPmf& channel,
                                       std::uint64_t noise_seed);

/**
 * Joint-typicality encoder and decoders for one scenario, auxiliary choice and
 * blocklength. Immutable after construction; safe to share across threads.
 */
class SchemeCoder {
 public:
  SchemeCoder(const ScenarioSpec& scenario, const AuxiliarySpec& aux, const TypicalityParams& params);

  const JointPmf& composed() const { return composed_; }
  const TypicalityParams& params() const { return params_; }

  /// First eps'-typical (m0,m1,m2) in lexicographic order, else (1,1,1).
  EncodeResult encode(const Sequence& s1, const Sequence& s2, const CodebookEnsemble& ens) const;

  /// x_i = x(s1_i, s2_i, u0_i, u1_i, u2_i) for the chosen codewords.
  Sequence channel_input(const Sequence& s1, const Sequence& s2, const EncodeResult& m,
                         const CodebookEnsemble& ens) const;

  /// Decoder k in {1,2}: the unique s_k^n admitting an eps-typical tuple for some (m0, m_k).
  /// Pruned search, equivalent to the exhaustive one.
  DecodeResult decode(int k, const Sequence& y, const CodebookEnsemble& ens) const;

  /// Exhaustive search over every s_k^n, m0 and m_k. For tests at small n.
  DecodeResult decode_reference(int k, const Sequence& y, const CodebookEnsemble& ens) const;

  ErrorEvent classify(int k, const Sequence& s_true, const EncodeResult& m, const Sequence& y,
                      const DecodeResult& decoded, const CodebookEnsemble& ens) const;

  /// Nominal tuple checks of one decoder call; throws BudgetExceeded past kDecodingBudget.
  double decoding_cost(int k, const CodebookEnsemble& ens) const;
  /// Nominal encoder search size; throws BudgetExceeded past kCoveringBudget.
  double covering_cost(const CodebookEnsemble& ens) const;

 private:
  struct Side {
    JointPmf full;      // (S_k, U0, U_k, Y_k)
    TypicalityChecker full_check;
    TypicalityChecker u0y_check;    // (U0, Y_k)
    TypicalityChecker su0y_check;   // (S_k, U0, Y_k)
  };
  struct Search;

  const Side& side(int k) const;
  void search(Search& ctx) const;
  void search_sources(Search& ctx, std::size_t i) const;
  bool has_codeword(Search& ctx) const;

  ScenarioSpec scenario_;
  AuxiliarySpec aux_;
  TypicalityParams params_;
  JointPmf composed_;
  TypicalityChecker source_check_;   // (S1,S2) at eps'
  TypicalityChecker enc0_check_;     // (S1,S2,U0)
  TypicalityChecker enc1_check_;     // (S1,S2,U0,U1)
  TypicalityChecker enc2_check_;     // (S1,S2,U0,U1,U2)
  std::vector<Side> sides_;
};

}  // namespace csbc::simcode
