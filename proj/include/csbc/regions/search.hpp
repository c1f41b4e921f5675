#pragma once

#include <array>
#include <cstdint>

#include "csbc/regions/evaluators.hpp"

namespace csbc::regions {

struct SearchOptions {
  std::array<std::size_t, 3> cardinalities{1, 1, 1};
  /// Independent restarts; each gets seed derived from (seed, restart).
  std::size_t restarts = 8;
  /// Objective evaluations per restart.
  std::size_t budget = 2000;
  std::uint64_t seed = 1;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

struct SearchResult {
  AuxiliarySpec aux;
  RegionReport report;
  double min_margin = 0;
  std::size_t evaluations = 0;
};

/**
 * Random-restart coordinate ascent on min Theorem-2 margin over p(u|s1,s2)
 * and x(s1,s2,u). Deterministic for a given seed regardless of thread count;
 * ties between restarts go to the lowest restart index. With all
 * cardinalities 1 and few enough maps, every x map is enumerated instead.
 */
SearchResult search_feasible_aux(const ScenarioSpec& scenario, const SearchOptions& options);

/// Default U0 cardinality suggestion min{|X||S1||S2| + 4, |Y1||Y2||S1||S2| + 4}.
std::size_t suggested_u0_cardinality(const ScenarioSpec& scenario);

}  // namespace csbc::regions
