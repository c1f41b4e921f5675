#pragma once

#include <random>
#include <utility>
#include <vector>

#include "csbc/regions/scenario.hpp"

namespace helpers {

using csbc::measures::ConditionalPmf;
using csbc::measures::FiniteVariable;
using csbc::measures::JointPmf;
using csbc::regions::AuxiliarySpec;
using csbc::regions::ScenarioSpec;

/// Random point of the probability simplex; with `sparse`, about a third of the entries are zero.
inline std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t k, bool sparse = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(k);
  double total = 0;
  for (auto& x : p) {
    x = (sparse && u(rng) < 0.33) ? 0.0 : u(rng) + 1e-3;
    total += x;
  }
  if (total == 0) {
    p[0] = total = 1;
  }
  for (auto& x : p) x /= total;
  return p;
}

inline JointPmf random_pmf(std::mt19937_64& rng, std::vector<FiniteVariable> vars, bool sparse = false) {
  std::size_t cells = 1;
  for (const auto& v : vars) cells *= v.alphabet_size;
  return JointPmf(std::move(vars), random_simplex(rng, cells, sparse));
}

/// `rows` normalized slices of width `width`, concatenated.
inline std::vector<double> random_slices(std::mt19937_64& rng, std::size_t rows, std::size_t width,
                                         bool sparse = false) {
  std::vector<double> out;
  for (std::size_t r = 0; r < rows; ++r) {
    const auto s = random_simplex(rng, width, sparse);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

inline ScenarioSpec random_scenario(std::mt19937_64& rng, std::size_t s1 = 2, std::size_t s2 = 2, std::size_t x = 2,
                                    std::size_t y1 = 2, std::size_t y2 = 2) {
  ConditionalPmf ch{{{"X", x}}, {{"Y1", y1}, {"Y2", y2}}, random_slices(rng, x, y1 * y2)};
  return {csbc::regions::make_source(s1, s2, random_simplex(rng, s1 * s2)), ch};
}

inline AuxiliarySpec random_aux(std::mt19937_64& rng, const ScenarioSpec& sc, std::size_t u0 = 2, std::size_t u1 = 2,
                                std::size_t u2 = 2, bool sparse = false) {
  const std::size_t s1 = sc.source.variable("S1").alphabet_size, s2 = sc.source.variable("S2").alphabet_size;
  const std::size_t cells = s1 * s2 * u0 * u1 * u2;
  std::uniform_int_distribution<std::size_t> xd(0, sc.x_size() - 1);
  std::vector<std::size_t> table(cells);
  for (auto& t : table) t = xd(rng);
  return csbc::regions::make_aux(s1, s2, u0, u1, u2, random_slices(rng, s1 * s2, u0 * u1 * u2, sparse), sc.x_size(),
                                 std::move(table));
}

/// S1 = S2 uniform on `a` symbols, noiseless channel, U0 = S1, U1 = U2 constant, X = U0.
inline std::pair<ScenarioSpec, AuxiliarySpec> identity_scenario(std::size_t a) {
  std::vector<double> src(a * a, 0.0);
  for (std::size_t i = 0; i < a; ++i) src[i * a + i] = 1.0 / static_cast<double>(a);
  ScenarioSpec sc{csbc::regions::make_source(a, a, src), csbc::regions::noiseless_channel(a)};
  std::vector<double> mass;
  std::vector<std::size_t> table;
  for (std::size_t s1 = 0; s1 < a; ++s1) {
    for (std::size_t s2 = 0; s2 < a; ++s2) {
      for (std::size_t u0 = 0; u0 < a; ++u0) {
        mass.push_back(u0 == s1 ? 1.0 : 0.0);
        table.push_back(u0);
      }
    }
  }
  return {sc, csbc::regions::make_aux(a, a, a, 1, 1, mass, a, table)};
}

/// S1 = S2 ~ Ber(0.2), noiseless binary channel, U0 = B uniform, U1 = U2 = S1 xor B, X = U1.
inline std::pair<ScenarioSpec, AuxiliarySpec> ber02_scenario() {
  ScenarioSpec sc{csbc::regions::make_source(2, 2, {0.8, 0, 0, 0.2}), csbc::regions::noiseless_channel(2)};
  std::vector<double> mass(32, 0.0);
  std::vector<std::size_t> table(32, 0);
  for (std::size_t s1 = 0; s1 < 2; ++s1) {
    for (std::size_t s2 = 0; s2 < 2; ++s2) {
      for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t u1 = s1 ^ b;
        mass[(s1 * 2 + s2) * 8 + (b * 2 + u1) * 2 + u1] = 0.5;
      }
    }
  }
  for (std::size_t c = 0; c < 32; ++c) table[c] = (c >> 1) & 1;
  return {sc, csbc::regions::make_aux(2, 2, 2, 2, 2, mass, 2, table)};
}

}  // namespace helpers
