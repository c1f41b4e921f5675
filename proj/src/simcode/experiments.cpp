#include "csbc/simcode/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace csbc::simcode {

namespace {

/// Runs body(t) for t in [0, count) on a pool; rethrows the first exception.
template <class Body>
void parallel_for(std::size_t count, std::size_t threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= count) return;
      try {
        body(t);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

void check_config(const ExperimentConfig& config) {
  config.params.validate();
  if (config.trials == 0) throw SimError("need at least one trial");
}

TrialRecord run_trial(const SchemeCoder& coder, const ScenarioSpec& scenario, const ExperimentConfig& config,
                      std::uint64_t trial, bool decode) {
  const TrialSeeds seeds = trial_seeds(config.seed, trial);
  const std::size_t n = config.params.n;
  const CodebookEnsemble ens(coder.composed(), config.rates, config.scheme, seeds.codebook, n);
  const auto [s1, s2] = sample_source(scenario.source, n, seeds.source);
  const EncodeResult m = coder.encode(s1, s2, ens);
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = seeds.trial;
  rec.source_typical = m.source_typical;
  rec.covering_failed = !m.found;
  rec.m0 = m.m0;
  rec.m1 = m.m1;
  rec.m2 = m.m2;
  if (!decode) return rec;
  const Sequence x = coder.channel_input(s1, s2, m, ens);
  const auto [y1, y2] = transmit(x, scenario.channel, seeds.noise);
  const DecodeResult d1 = coder.decode(1, y1, ens);
  const DecodeResult d2 = coder.decode(2, y2, ens);
  rec.decode1 = {d1.status, coder.classify(1, s1, m, y1, d1, ens)};
  rec.decode2 = {d2.status, coder.classify(2, s2, m, y2, d2, ens)};
  rec.error = rec.decode1.event != ErrorEvent::Correct || rec.decode2.event != ErrorEvent::Correct;
  return rec;
}

void tally(DecoderTally& t, const DecoderOutcome& o) {
  switch (o.event) {
    case ErrorEvent::Correct: ++t.correct; break;
    case ErrorEvent::E1: ++t.e1; break;
    case ErrorEvent::E2: ++t.e2; break;
    case ErrorEvent::E3: ++t.e3; break;
  }
  if (o.status == DecodeStatus::NoneTypical) ++t.none_typical;
  if (o.status == DecodeStatus::Ambiguous) ++t.ambiguous;
}

std::vector<TrialRecord> run_trials(const SchemeCoder& coder, const ScenarioSpec& scenario,
                                    const ExperimentConfig& config, bool decode) {
  std::vector<TrialRecord> records(config.trials);
  parallel_for(config.trials, config.threads,
               [&](std::size_t t) { records[t] = run_trial(coder, scenario, config, t, decode); });
  return records;
}

}  // namespace

TrialSeeds trial_seeds(std::uint64_t master, std::uint64_t trial) {
  const std::uint64_t t = hash_combine(mix64(master), trial);
  return {t, hash_combine(t, 1), hash_combine(t, 2), hash_combine(t, 3)};
}

Proportion proportion(std::size_t hits, std::size_t trials) {
  Proportion p;
  p.hits = hits;
  p.trials = trials;
  if (trials == 0) return p;
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(trials);
  const double ph = static_cast<double>(hits) / nn;
  const double denom = 1 + z * z / nn;
  const double centre = (ph + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / nn + z * z / (4 * nn * nn)) / denom;
  p.estimate = ph;
  p.low = std::max(0.0, centre - half);
  p.high = std::min(1.0, centre + half);
  return p;
}

CoveringResult run_covering_experiment(const ScenarioSpec& scenario, const AuxiliarySpec& aux,
                                       const ExperimentConfig& config) {
  check_config(config);
  const SchemeCoder coder(scenario, aux, config.params);
  coder.covering_cost(CodebookEnsemble(coder.composed(), config.rates, config.scheme, 0, config.params.n));
  auto records = run_trials(coder, scenario, config, false);
  CoveringResult r;
  r.trials = config.trials;
  std::size_t failures = 0;
  for (const auto& rec : records) {
    failures += rec.covering_failed;
    r.atypical_sources += !rec.source_typical;
  }
  r.failure = proportion(failures, config.trials);
  if (config.keep_records) r.records = std::move(records);
  return r;
}

EndToEndResult run_end_to_end(const ScenarioSpec& scenario, const AuxiliarySpec& aux, const ExperimentConfig& config) {
  check_config(config);
  const SchemeCoder coder(scenario, aux, config.params);
  const CodebookEnsemble probe(coder.composed(), config.rates, config.scheme, 0, config.params.n);
  coder.covering_cost(probe);
  coder.decoding_cost(1, probe);
  coder.decoding_cost(2, probe);
  auto records = run_trials(coder, scenario, config, true);
  EndToEndResult r;
  r.trials = config.trials;
  std::size_t errors = 0;
  for (const auto& rec : records) {
    r.atypical_sources += !rec.source_typical;
    r.covering_failures += rec.covering_failed;
    tally(r.decoder1, rec.decode1);
    tally(r.decoder2, rec.decode2);
    errors += rec.error;
  }
  r.error = proportion(errors, config.trials);
  if (config.keep_records) r.records = std::move(records);
  return r;
}

}  // namespace csbc::simcode
