#pragma once

#include <cstdint>
#include <vector>

#include "csbc/simcode/coder.hpp"

namespace csbc::simcode {

struct ExperimentConfig {
  RateTriple rates;
  TypicalityParams params;
  Scheme scheme = Scheme::Plain;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// 0 = hardware concurrency. Results do not depend on it.
  std::size_t threads = 0;
  bool keep_records = true;
};

/// Seeds of one trial, all derived from (master seed, trial index).
struct TrialSeeds {
  std::uint64_t trial;
  std::uint64_t source;
  std::uint64_t codebook;
  std::uint64_t noise;
};
TrialSeeds trial_seeds(std::uint64_t master, std::uint64_t trial);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  bool source_typical = false;
  bool covering_failed = false;
  std::uint64_t m0 = 1, m1 = 1, m2 = 1;
  DecoderOutcome decode1, decode2;
  /// (S1^, S2^) != (S1, S2).
  bool error = false;
};

struct Proportion {
  std::size_t hits = 0;
  std::size_t trials = 0;
  double estimate = 0;
  /// Wilson score 95% interval.
  double low = 0, high = 0;
};
Proportion proportion(std::size_t hits, std::size_t trials);

struct CoveringResult {
  std::size_t trials = 0;
  std::size_t atypical_sources = 0;
  Proportion failure;
  std::vector<TrialRecord> records;
};

struct DecoderTally {
  std::size_t correct = 0, e1 = 0, e2 = 0, e3 = 0;
  std::size_t none_typical = 0, ambiguous = 0;
};

struct EndToEndResult {
  std::size_t trials = 0;
  std::size_t atypical_sources = 0;
  std::size_t covering_failures = 0;
  DecoderTally decoder1, decoder2;
  Proportion error;
  std::vector<TrialRecord> records;
};

/// Empirical probability that no eps'-typical triple exists; fresh codebooks per trial.
CoveringResult run_covering_experiment(const ScenarioSpec& scenario, const AuxiliarySpec& aux,
                                       const ExperimentConfig& config);

/// Encode, transmit and decode at both receivers; counts error events.
EndToEndResult run_end_to_end(const ScenarioSpec& scenario, const AuxiliarySpec& aux, const ExperimentConfig& config);

}  // namespace csbc::simcode
