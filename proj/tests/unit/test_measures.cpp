#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "csbc/measures/measures.hpp"
#include "helpers.hpp"

using namespace csbc;
using namespace csbc::measures;

namespace {

JointPmf bern(double p, const std::string& name = "A") { return JointPmf({{name, 2}}, {1 - p, p}); }

}  // namespace

TEST_CASE("joint pmf validation") {
  CHECK_THROWS_AS(JointPmf({{"A", 2}}, {0.5, 0.6}), MeasureError);
  CHECK_THROWS_AS(JointPmf({{"A", 2}}, {1.2, -0.2}), MeasureError);
  CHECK_THROWS_AS(JointPmf({{"A", 2}, {"A", 2}}, {0.25, 0.25, 0.25, 0.25}), MeasureError);
  CHECK_THROWS_AS(JointPmf({{"A", 2}}, {1.0}), MeasureError);
  const JointPmf p({{"A", 2}, {"B", 3}}, {0.1, 0.2, 0.1, 0.3, 0.2, 0.1});
  CHECK(p.cell_count() == 6);
  CHECK(p.index_of("B") == 1);
  CHECK_THROWS_AS(p.index_of("C"), MeasureError);
  const std::size_t outcome[] = {1, 2};
  CHECK(p.at(outcome) == doctest::Approx(0.1));
}

TEST_CASE("entropy examples") {
  CHECK(entropy(bern(0.5), {"A"}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(entropy(bern(0.3), {"A"}, {"A"}) == doctest::Approx(0.0));
  CHECK(entropy(bern(0.11), {"A"}) == doctest::Approx(0.499915958).epsilon(1e-9));
  CHECK_THROWS_AS(entropy(bern(0.5), {"Z"}), MeasureError);
}

TEST_CASE("mutual information examples") {
  const JointPmf indep({{"A", 2}, {"B", 2}}, {0.06, 0.14, 0.24, 0.56});
  CHECK(std::abs(mutual_information(indep, {"A"}, {"B"})) < 1e-12);
  const JointPmf x({{"X", 3}}, {0.2, 0.5, 0.3});
  CHECK(mutual_information(x, {"X"}, {"X"}) == doctest::Approx(entropy(x, {"X"})).epsilon(1e-12));

  // I(U1;U0,S2|S1) >= I(U1;S2|S1) on random pmfs.
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto p = helpers::random_pmf(rng, {{"S1", 2}, {"S2", 2}, {"U0", 2}, {"U1", 2}}, t % 2 == 0);
    CHECK(mutual_information(p, {"U1"}, {"U0", "S2"}, {"S1"}) - mutual_information(p, {"U1"}, {"S2"}, {"S1"}) >=
          -1e-12);
  }
}

TEST_CASE("eval_expression examples") {
  const auto a = InfoExpression::entropy({"A"});
  CHECK(eval_expression(a - a, bern(0.3)) == 0.0);
  // v1 = I(U0;S1,S2) with U0 = S1 = S2 a uniform bit.
  const JointPmf coupled({{"S1", 2}, {"S2", 2}, {"U0", 2}}, {0.5, 0, 0, 0, 0, 0, 0, 0.5});
  CHECK(eval_expression(InfoExpression::mutual_information({"U0"}, {"S1", "S2"}), coupled) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // v6 with constant auxiliaries.
  const JointPmf consts({{"S1", 2}, {"S2", 2}, {"U1", 1}, {"U2", 1}}, {0.4, 0.1, 0.2, 0.3});
  const auto v6 = InfoExpression::mutual_information({"U1", "S1"}, {"U2", "S2"}) -
                  InfoExpression::mutual_information({"S1"}, {"S2"});
  CHECK(std::abs(eval_expression(v6, consts)) < 1e-12);
  CHECK_THROWS_AS(eval_expression(InfoExpression::entropy({"Q"}), consts), MeasureError);
}

TEST_CASE("entropy table agrees with direct evaluation") {
  std::mt19937_64 rng(5);
  const auto p = helpers::random_pmf(rng, {{"A", 2}, {"B", 3}, {"C", 2}});
  const EntropyTable table(p);
  const auto e = InfoExpression::mutual_information({"A"}, {"B"}, {"C"}) + InfoExpression::entropy({"B", "C"});
  CHECK(table.eval(e) == doctest::Approx(eval_expression(e, p)).epsilon(1e-12));
}

TEST_CASE("chain rule and nonnegativity on random pmfs") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto p = helpers::random_pmf(rng, {{"A", 2}, {"B", 3}, {"C", 2}, {"D", 2}, {"E", 2}}, t % 3 == 0);
    CHECK(std::abs(entropy(p, {"A", "B"}) - entropy(p, {"A"}) - entropy(p, {"B"}, {"A"})) < 1e-10);
    CHECK(mutual_information(p, {"A", "E"}, {"B"}, {"C", "D"}) >= -1e-12);
    CHECK(mutual_information(p, {"A"}, {"A", "B"}, {"C"}) >= -1e-12);
  }
}

TEST_CASE("common part") {
  const JointPmf product({{"S1", 2}, {"S2", 2}}, {0.06, 0.14, 0.24, 0.56});
  CHECK(common_part(product).size == 1);

  const JointPmf diag({{"S1", 2}, {"S2", 2}}, {0.5, 0, 0, 0.5});
  const auto k = common_part(diag);
  REQUIRE(k.size == 2);
  CHECK(k.f[0] == 0u);
  CHECK(k.f[1] == 1u);
  CHECK(k.g[0] == 0u);
  CHECK(k.g[1] == 1u);

  // Support {(0,0),(0,1),(1,1),(2,2)}.
  std::vector<double> m(9, 0.0);
  m[0 * 3 + 0] = 0.2;
  m[0 * 3 + 1] = 0.2;
  m[1 * 3 + 1] = 0.2;
  m[2 * 3 + 2] = 0.4;
  const auto blocks = common_part(JointPmf({{"S1", 3}, {"S2", 3}}, m));
  REQUIRE(blocks.size == 2);
  CHECK(blocks.f[0] == blocks.f[1]);
  CHECK(blocks.f[2] != blocks.f[0]);
  CHECK(blocks.g[2] == blocks.f[2]);

  // Zero-probability symbols belong to no component.
  const auto partial = common_part(JointPmf({{"S1", 3}, {"S2", 2}}, {0.5, 0, 0, 0, 0, 0.5}));
  CHECK(partial.size == 2);
  CHECK_FALSE(partial.f[1].has_value());

  CHECK_THROWS_AS(common_part(JointPmf({{"A", 2}}, {0.5, 0.5})), MeasureError);
}

TEST_CASE("common part is invariant under relabeling") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const auto p = helpers::random_pmf(rng, {{"S1", 4}, {"S2", 3}}, true);
    const auto k = common_part(p);
    std::vector<std::size_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> q(p.cell_count());
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 3; ++b) q[perm[a] * 3 + b] = p.mass()[a * 3 + b];
    }
    const auto kq = common_part(JointPmf(p.variables(), q));
    CHECK(kq.size == k.size);
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) {
        CHECK((k.f[a] == k.f[b]) == (kq.f[perm[a]] == kq.f[perm[b]]));
      }
    }
    // Idempotent: the partition of the common part's own support graph is the same.
    CHECK(common_part(p).f == k.f);
  }
}

TEST_CASE("adjoin independent") {
  std::mt19937_64 rng(2);
  const auto p = helpers::random_pmf(rng, {{"A", 2}, {"B", 3}});
  const auto q = adjoin_independent(p, {"W", 2}, {0.5, 0.5});
  CHECK(entropy(q, {"W"}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(mutual_information(q, {"A"}, {"B"}) - mutual_information(p, {"A"}, {"B"})) < 1e-12);
  CHECK(std::abs(entropy(q, {"A", "B"}) - entropy(p, {"A", "B"})) <= 1e-12);
  CHECK(entropy(q, {"A", "W"}) == doctest::Approx(entropy(p, {"A"}) + 1.0).epsilon(1e-12));
  CHECK_THROWS_AS(adjoin_independent(p, {"A", 2}, {0.5, 0.5}), MeasureError);
}

TEST_CASE("compose scenario") {
  // Noiseless channel, x = u0, U0 = S1 = S2.
  const JointPmf src({{"S1", 2}, {"S2", 2}}, {0.5, 0, 0, 0.5});
  ConditionalPmf aux{{{"S1", 2}, {"S2", 2}}, {{"U0", 2}}, {1, 0, 1, 0, 0, 1, 0, 1}};
  DeterministicMap xm{{{"S1", 2}, {"S2", 2}, {"U0", 2}}, {"X", 2}, {0, 1, 0, 1, 0, 1, 0, 1}};
  ConditionalPmf ch{{{"X", 2}}, {{"Y1", 2}, {"Y2", 2}}, {1, 0, 0, 0, 0, 0, 0, 1}};
  const auto p = compose_scenario(src, aux, xm, ch);
  CHECK(entropy(p, {"Y1"}, {"S1"}) == doctest::Approx(0.0));
  CHECK(entropy(p, {"S1"}, {"Y2"}) == doctest::Approx(0.0));
  CHECK(mutual_information(p, {"S1"}, {"Y1"}) == doctest::Approx(1.0));

  ConditionalPmf bad = aux;
  bad.mass[0] = 0.7;
  CHECK_THROWS_AS(compose_scenario(src, bad, xm, ch), MeasureError);
}

TEST_CASE("composed scenarios are Markov through X and keep the source marginal") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto sc = helpers::random_scenario(rng);
    const auto aux = helpers::random_aux(rng, sc, 2, 2, 2, t % 2 == 1);
    const auto p = compose_scenario(sc.source, aux.aux, aux.x_map, sc.channel);
    CHECK(std::abs(mutual_information(p, {"Y1", "Y2"}, {"S1", "S2", "U0", "U1", "U2"}, {"X"})) < 1e-10);
    const auto m = marginalize(p, {"S1", "S2"});
    for (std::size_t c = 0; c < 4; ++c) CHECK(std::abs(m.mass()[c] - sc.source.mass()[c]) < 1e-12);
    CHECK(mutual_information(p, {"U0", "U1", "S1"}, {"Y1"}) <= entropy(p, {"Y1"}) + 1e-12);
  }
}

TEST_CASE("theorem-2 rows match the v combinations on random pmfs") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    const auto p = helpers::random_pmf(rng, {{"S1", 2}, {"S2", 2}, {"U0", 2}, {"U1", 2}, {"U2", 2}, {"Y1", 2}, {"Y2", 2}});
    auto I = [&](VarSet a, VarSet b, VarSet c = {}) { return mutual_information(p, a, b, c); };
    const double v1 = I({"U0"}, {"S1", "S2"});
    const double v4 = v1 + I({"U1"}, {"U0", "S2"}, {"S1"});
    const double v9 = I({"U0", "U1", "S1"}, {"Y1"}) + I({"U0"}, {"U1", "S1"});
    CHECK(std::abs((v9 - v4) - (I({"U0", "U1", "S1"}, {"Y1"}) - I({"U0", "U1"}, {"S2"}, {"S1"}))) < 1e-10);
  }
}

TEST_CASE("info expression algebra") {
  const auto i = InfoExpression::mutual_information({"A"}, {"B"}, {"C"});
  CHECK(i.to_string() == "-H(A,B,C) + H(A,C) + H(B,C) - H(C)");
  CHECK((i - i).is_zero());
  CHECK((Rational(2) * i - i) == i);
  const auto s = InfoExpression::entropy({"U0"}).substitute({{"U0", {"U0", "W"}}});
  CHECK(s == InfoExpression::entropy({"U0", "W"}));
  CHECK(make_varset({"B", "A", "B"}) == VarSet{"A", "B"});
}
