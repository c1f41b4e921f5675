#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "csbc/regions/evaluators.hpp"
#include "csbc/simcode/experiments.hpp"
#include "helpers.hpp"

using namespace csbc;
using namespace csbc::simcode;
using regions::RateTriple;

namespace {

Sequence bits(const char* text) {
  Sequence s;
  for (const char* c = text; *c; ++c) s.push_back(static_cast<std::uint8_t>(*c - '0'));
  return s;
}

Sequence random_sequence(std::mt19937_64& rng, std::size_t n, std::size_t alphabet) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(alphabet) - 1);
  Sequence s(n);
  for (auto& x : s) x = static_cast<std::uint8_t>(d(rng));
  return s;
}

/// Every s in A^n, in lexicographic order.
std::vector<Sequence> all_sequences(std::size_t n, std::size_t a) {
  std::vector<Sequence> out;
  Sequence s(n, 0);
  while (true) {
    out.push_back(s);
    std::size_t i = n;
    while (i > 0 && ++s[i - 1] == a) s[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<double> mass_of(const JointPmf& p) { return {p.mass().begin(), p.mass().end()}; }

bool same_records(const std::vector<TrialRecord>& a, const std::vector<TrialRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto &x = a[i], &y = b[i];
    if (x.trial != y.trial || x.seed != y.seed || x.source_typical != y.source_typical ||
        x.covering_failed != y.covering_failed || x.m0 != y.m0 || x.m1 != y.m1 || x.m2 != y.m2 ||
        x.decode1.status != y.decode1.status || x.decode1.event != y.decode1.event ||
        x.decode2.status != y.decode2.status || x.decode2.event != y.decode2.event || x.error != y.error) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("empirical pmf") {
  const std::vector<measures::FiniteVariable> xy{{"X", 2}, {"Y", 2}};
  const auto p = empirical_pmf(xy, {bits("0101"), bits("1010")});
  CHECK(mass_of(p) == std::vector<double>{0, 0.5, 0.5, 0});
  CHECK(mass_of(empirical_pmf({{"X", 2}}, {bits("111")})) == std::vector<double>{0, 1});
  CHECK(empirical_pmf({{"X", 2}}, {bits("0110010010")}).mass()[1] == doctest::Approx(0.4));
  CHECK_THROWS_AS(empirical_pmf(xy, {bits("01"), bits("011")}), SimError);
  CHECK_THROWS_AS(empirical_pmf({{"X", 2}}, {bits("012")}), SimError);
}

TEST_CASE("robust typicality") {
  const JointPmf ber({{"X", 2}}, {0.7, 0.3});
  const auto four = bits("0110010010");
  CHECK(is_typical({four}, ber, 0.34));
  CHECK_FALSE(is_typical({four}, ber, 0.33));
  CHECK(is_typical({bits("0001001001")}, ber, 0.0));

  const JointPmf half({{"X", 3}}, {0.5, 0.5, 0.0});
  CHECK_FALSE(is_typical({bits("0120")}, half, 10.0));
  CHECK(is_typical({bits("0110")}, half, 0.0));

  // Sandwich and agreement with the incremental checker.
  std::mt19937_64 rng(4);
  const auto pmf = helpers::random_pmf(rng, {{"A", 2}, {"B", 3}});
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 6;
    const std::vector<Sequence> seqs{random_sequence(rng, n, 2), random_sequence(rng, n, 3)};
    for (double eps : {0.3, 0.6, 1.0, 2.0}) {
      const bool typ = is_typical(seqs, pmf, eps);
      if (typ) CHECK(is_typical(seqs, pmf, eps * 1.5));
      TypicalityChecker checker(pmf, eps, n);
      CountState state(checker);
      bool pushed = true;
      for (std::size_t i = 0; i < n && pushed; ++i) {
        const std::uint8_t cell[2] = {seqs[0][i], seqs[1][i]};
        pushed = state.push(checker.cell_of(cell));
      }
      CHECK((pushed && state.complete_and_typical()) == typ);
    }
  }
  CHECK_THROWS_AS((TypicalityParams{8, 0.1, 0.2}.validate()), SimError);
  CHECK_NOTHROW((TypicalityParams{8, 0.2, 0.1}.validate()));
}

TEST_CASE("message counts") {
  CHECK(message_count(0.0, 12) == 1);
  CHECK(message_count(1.0, 8) == 256);
  CHECK(message_count(1.5 * std::log2(3.0), 12) == 387420488);
  CHECK(message_count(0.75 * std::log2(3.0), 12) == 19682);
  CHECK_THROWS_AS(message_count(6.0, 12), SimError);
}

TEST_CASE("keyed codebooks") {
  const auto [sc, aux] = helpers::ber02_scenario();
  const auto pmf = regions::compose(sc, aux);
  const RateTriple r{1, 0.5, 0.5};
  const CodebookEnsemble a(pmf, r, Scheme::Plain, 9, 8), b(pmf, r, Scheme::Plain, 9, 8), c(pmf, r, Scheme::Plain, 10, 8);
  CHECK(a.count(0) == 256);
  CHECK(a.count(1) == 16);
  CHECK(a.u0(5) == b.u0(5));
  bool differs = false;
  for (std::uint64_t m = 1; m <= 8; ++m) differs = differs || a.u0(m) != c.u0(m);
  CHECK(differs);
  const auto s = bits("01100100");
  // Plain: u1 does not depend on m0.
  CHECK(a.uk(1, s, 1, 3, a.u0(1)) == a.uk(1, s, 7, 3, a.u0(7)));
  for (std::size_t i = 0; i < 8; ++i) CHECK(a.u0_at(5, i) == a.u0(5)[i]);

  // Codeword symbols follow p(u0) (uniform here): frequency within 3 sigma.
  std::size_t ones = 0, total = 0;
  for (std::uint64_t m = 1; m <= 256; ++m) {
    for (auto x : a.u0(m)) ones += x, ++total;
  }
  CHECK(std::abs(double(ones) / double(total) - 0.5) < 3 * std::sqrt(0.25 / double(total)));

  // Superposition: u1 given u0 follows p(u1|u0,s1); here U1 = S1 xor U0 exactly.
  const CodebookEnsemble sup(pmf, r, Scheme::Superposition, 9, 8);
  for (std::uint64_t m0 = 1; m0 <= 4; ++m0) {
    const auto u0 = sup.u0(m0);
    const auto u1 = sup.uk(1, s, m0, 2, u0);
    for (std::size_t i = 0; i < 8; ++i) CHECK(u1[i] == (s[i] ^ u0[i]));
  }
}

TEST_CASE("source sampling and channel") {
  const auto src = regions::make_source(2, 2, {0.4, 0.1, 0.2, 0.3});
  const auto [s1, s2] = sample_source(src, 20000, 3);
  CHECK(sample_source(src, 20000, 3).first == s1);
  std::size_t both = 0;
  for (std::size_t i = 0; i < s1.size(); ++i) both += s1[i] == 1 && s2[i] == 1;
  CHECK(std::abs(double(both) / 20000 - 0.3) < 3 * std::sqrt(0.3 * 0.7 / 20000));

  std::mt19937_64 rng(8);
  const auto x = random_sequence(rng, 10000, 2);
  const auto [y1, y2] = transmit(x, regions::noiseless_channel(2), 5);
  CHECK(y1 == x);
  CHECK(y2 == x);

  const auto ch = regions::product_channel({{1, 0}, {0, 1}}, {{0.5, 0.5}, {0.5, 0.5}});
  CHECK(transmit(x, ch, 6).first == x);

  const auto noisy = regions::product_channel({{0.9, 0.1}, {0.2, 0.8}}, {{0.7, 0.3}, {0.4, 0.6}});
  const auto [z1, z2] = transmit(x, noisy, 7);
  CHECK(transmit(x, noisy, 7).second == z2);
  for (std::uint8_t xs = 0; xs < 2; ++xs) {
    std::size_t count[2][2] = {};
    std::size_t nx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != xs) continue;
      ++nx;
      ++count[z1[i]][z2[i]];
    }
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const double p = noisy.mass[(xs * 2 + a) * 2 + b];
        const double sigma = std::sqrt(p * (1 - p) / double(nx));
        CHECK(std::abs(double(count[a][b]) / double(nx) - p) <= 3 * sigma);
      }
    }
  }
}

TEST_CASE("encoder") {
  // Zero rates: one codeword triple, found iff typical.
  const auto [sc, aux] = helpers::identity_scenario(2);
  const TypicalityParams params{8, 1.0, 0.5};
  const SchemeCoder coder(sc, aux, params);
  const CodebookEnsemble single(coder.composed(), {0, 0, 0}, Scheme::Plain, 7, 8);
  const auto s_match = single.u0(1);
  auto m = coder.encode(s_match, s_match, single);
  const bool typ = is_typical({s_match}, JointPmf({{"S", 2}}, {0.5, 0.5}), 0.5);
  CHECK(m.found == typ);
  CHECK((m.m0 == 1 && m.m1 == 1 && m.m2 == 1));
  Sequence other = s_match;
  other[0] ^= 1;
  m = coder.encode(other, other, single);
  CHECK_FALSE(m.found);
  CHECK((m.m0 == 1 && m.m1 == 1 && m.m2 == 1));

  // Identity, n = 8, seed 7: the oracle scans all 2^{nR0} codewords for the first copy of s.
  const CodebookEnsemble ens(coder.composed(), {1.0, 0, 0}, Scheme::Plain, 7, 8);
  REQUIRE(ens.count(0) == 256);
  std::size_t hits = 0;
  for (const auto& s : all_sequences(8, 2)) {
    std::uint64_t first = 0;
    for (std::uint64_t k = 1; k <= 256 && first == 0; ++k) {
      if (ens.u0(k) == s) first = k;
    }
    const bool s_typ = is_typical({s}, JointPmf({{"S", 2}}, {0.5, 0.5}), 0.5);
    const auto r = coder.encode(s, s, ens);
    CHECK(r.source_typical == s_typ);
    if (s_typ && first != 0) {
      CHECK(r.found);
      CHECK(r.m0 == first);
      ++hits;
    } else {
      CHECK_FALSE(r.found);
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("decoder matches the exhaustive reference") {
  std::mt19937_64 rng(12);
  // At n = 4 a cell needs eps >= 1 to be allowed a zero count, so the full
  // tuple can only be typical with eps >= 1 and sparse distributions.
  const TypicalityParams params{4, 1.2, 1.0};
  std::size_t decoded = 0, ambiguous = 0, none = 0;
  for (int t = 0; t < 60; ++t) {
    auto sc = helpers::random_scenario(rng);
    sc.channel.mass = helpers::random_slices(rng, 2, 4, true);
    const auto aux = helpers::random_aux(rng, sc, 2, 2, 2, true);
    const SchemeCoder coder(sc, aux, params);
    for (Scheme scheme : {Scheme::Plain, Scheme::Superposition}) {
      const CodebookEnsemble ens(coder.composed(), {0.5, 0.25, 0.25}, scheme, 100 + t, 4);
      for (const auto& y : all_sequences(4, 2)) {
        for (int k : {1, 2}) {
          const auto fast = coder.decode(k, y, ens);
          const auto ref = coder.decode_reference(k, y, ens);
          CHECK(fast.status == ref.status);
          if (ref.status == DecodeStatus::Decoded) CHECK(fast.estimate == ref.estimate);
          decoded += ref.status == DecodeStatus::Decoded;
          ambiguous += ref.status == DecodeStatus::Ambiguous;
          none += ref.status == DecodeStatus::NoneTypical;
        }
      }
    }
  }
  // The comparison covered all three outcomes.
  CHECK(decoded > 0);
  CHECK(ambiguous > 0);
  CHECK(none > 0);
}

TEST_CASE("decoder examples") {
  // Identity: with covering success every decoder recovers s.
  const auto [sc, aux] = helpers::identity_scenario(2);
  const SchemeCoder coder(sc, aux, {4, 1.0, 0.5});
  const CodebookEnsemble ens(coder.composed(), {1.0, 0, 0}, Scheme::Plain, 3, 4);
  std::size_t checked = 0;
  for (const auto& s : all_sequences(4, 2)) {
    const auto m = coder.encode(s, s, ens);
    if (!m.found) continue;
    const auto x = coder.channel_input(s, s, m, ens);
    CHECK(x == s);
    for (int k : {1, 2}) {
      const auto d = coder.decode(k, x, ens);
      REQUIRE(d.status == DecodeStatus::Decoded);
      CHECK(d.estimate == s);
      CHECK(coder.classify(k, s, m, x, d, ens) == ErrorEvent::Correct);
    }
    ++checked;
  }
  CHECK(checked > 0);

  // A zero-probability output symbol: nothing is typical.
  const ScenarioSpec wide{regions::make_source(2, 2, {0.5, 0, 0, 0.5}), regions::noiseless_channel(3)};
  const auto narrow = regions::constant_aux(wide, {0, 0, 1, 1});
  const SchemeCoder c2(wide, narrow, {4, 1.0, 0.5});
  const CodebookEnsemble e2(c2.composed(), {0, 0, 0}, Scheme::Plain, 1, 4);
  CHECK(c2.decode(1, bits("0120"), e2).status == DecodeStatus::NoneTypical);

  // Constant input: every typical source sequence is a candidate.
  const auto flat = regions::constant_aux(wide, {0, 0, 0, 0});
  const SchemeCoder c3(wide, flat, {4, 1.0, 0.5});
  const CodebookEnsemble e3(c3.composed(), {0, 0, 0}, Scheme::Plain, 1, 4);
  CHECK(c3.decode(1, bits("0000"), e3).status == DecodeStatus::Ambiguous);
  CHECK(c3.decode_reference(1, bits("0000"), e3).status == DecodeStatus::Ambiguous);
}

TEST_CASE("budgets") {
  const auto [sc, aux] = helpers::identity_scenario(2);
  const SchemeCoder coder(sc, aux, {12, 1.0, 0.5});
  const CodebookEnsemble ok(coder.composed(), {1.2, 0, 0}, Scheme::Plain, 1, 12);
  CHECK(coder.decoding_cost(1, ok) <= kDecodingBudget);
  const CodebookEnsemble big(coder.composed(), {2.0, 0.5, 0.5}, Scheme::Plain, 1, 12);
  CHECK_THROWS_AS(coder.decoding_cost(1, big), BudgetExceeded);
  const CodebookEnsemble huge(coder.composed(), {3.0, 3.0, 3.0}, Scheme::Plain, 1, 12);
  CHECK_THROWS_AS(coder.covering_cost(huge), BudgetExceeded);

  ExperimentConfig cfg;
  cfg.rates = {2.0, 0.5, 0.5};
  cfg.params = {12, 1.0, 0.5};
  cfg.trials = 2;
  CHECK_THROWS_AS(run_end_to_end(sc, aux, cfg), BudgetExceeded);
}

TEST_CASE("proportions and seeds") {
  auto p = proportion(5, 100);
  CHECK(p.estimate == doctest::Approx(0.05));
  CHECK(p.low == doctest::Approx(0.02154367915436796).epsilon(1e-12));
  CHECK(p.high == doctest::Approx(0.11175046923191913).epsilon(1e-12));
  p = proportion(0, 20);
  CHECK(p.low == 0);
  CHECK(p.high == doctest::Approx(0.16112515805281938).epsilon(1e-12));
  p = proportion(20, 20);
  CHECK(p.high == 1);

  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto s = trial_seeds(1, t);
    CHECK(s.trial == trial_seeds(1, t).trial);
    seen.insert(s.source);
    seen.insert(s.codebook);
    seen.insert(s.noise);
  }
  CHECK(seen.size() == 300);
  CHECK(trial_seeds(1, 0).trial != trial_seeds(2, 0).trial);
}

TEST_CASE("covering experiment") {
  const auto [sc, aux] = helpers::identity_scenario(3);
  ExperimentConfig cfg;
  cfg.params = {8, 1.5, 1.0};
  cfg.trials = 200;
  cfg.seed = 3;
  const double h = std::log2(3.0);
  // Statistical monotonicity in R0.
  std::vector<Proportion> ps;
  for (double f : {0.75, 1.0, 1.5}) {
    cfg.rates = {f * h, 0, 0};
    const auto r = run_covering_experiment(sc, aux, cfg);
    CHECK(r.trials == 200);
    CHECK(r.records.size() == 200);
    ps.push_back(r.failure);
  }
  CHECK(ps[0].estimate > ps[1].estimate);
  CHECK(ps[1].estimate > ps[2].estimate);

  // Zero rate with constant auxiliaries: failure is exactly source atypicality.
  const auto [bsc, baux] = helpers::identity_scenario(2);
  const auto constant = regions::constant_aux(bsc, {0, 0, 1, 1});
  cfg.rates = {0, 0, 0};
  cfg.params = {8, 0.5, 0.25};
  const auto z = run_covering_experiment(bsc, constant, cfg);
  CHECK(z.failure.hits == z.atypical_sources);
  CHECK(z.atypical_sources > 0);
}

TEST_CASE("end to end") {
  const auto [sc, aux] = helpers::identity_scenario(2);
  ExperimentConfig cfg;
  cfg.rates = {1.2, 0, 0};
  cfg.params = {8, 1.0, 0.5};
  cfg.trials = 60;
  cfg.seed = 4;
  cfg.threads = 1;
  const auto a = run_end_to_end(sc, aux, cfg);
  cfg.threads = 3;
  const auto b = run_end_to_end(sc, aux, cfg);
  CHECK(same_records(a.records, b.records));
  CHECK(a.error.hits == b.error.hits);
  for (const auto& t : {a.decoder1, a.decoder2}) {
    CHECK(t.correct + t.e1 + t.e2 + t.e3 == 60);
  }
  std::size_t errors = 0;
  for (const auto& r : a.records) {
    errors += r.error;
    if (!r.error) {
      CHECK(r.decode1.event == ErrorEvent::Correct);
      CHECK(r.decode2.event == ErrorEvent::Correct);
    }
  }
  CHECK(errors == a.error.hits);

  cfg.scheme = Scheme::Superposition;
  const auto s = run_end_to_end(sc, aux, cfg);
  CHECK(s.trials == 60);
  cfg.keep_records = false;
  CHECK(run_end_to_end(sc, aux, cfg).records.empty());

  // Output independent of the input: the decoders cannot learn s.
  ScenarioSpec deaf = sc;
  deaf.channel = regions::product_channel({{0.5, 0.5}, {0.5, 0.5}}, {{0.5, 0.5}, {0.5, 0.5}});
  cfg.scheme = Scheme::Plain;
  cfg.keep_records = true;
  const auto d = run_end_to_end(deaf, aux, cfg);
  CHECK(d.error.estimate > 0.9);
}
