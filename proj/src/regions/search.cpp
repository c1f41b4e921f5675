#include "csbc/regions/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace csbc::regions {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Shape {
  std::size_t s1, s2, u0, u1, u2, nx;
  std::size_t slices() const { return s1 * s2; }
  std::size_t nu() const { return u0 * u1 * u2; }
};

struct Point {
  std::vector<double> mass;
  std::vector<std::size_t> table;
};

class Evaluator {
 public:
  Evaluator(const ScenarioSpec& scenario, Shape shape) : scenario_(scenario), shape_(shape) {}

  AuxiliarySpec aux(const Point& p) const {
    return make_aux(shape_.s1, shape_.s2, shape_.u0, shape_.u1, shape_.u2, p.mass, shape_.nx, p.table);
  }

  double score(const Point& p) {
    ++count_;
    return eval_theorem2(scenario_, aux(p)).min_margin();
  }

  std::size_t count() const { return count_; }

 private:
  const ScenarioSpec& scenario_;
  Shape shape_;
  std::size_t count_ = 0;
};

struct RestartResult {
  Point best;
  double score = -std::numeric_limits<double>::infinity();
  std::size_t evaluations = 0;
};

RestartResult run_restart(const ScenarioSpec& scenario, const Shape& shape, std::size_t budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_int_distribution<std::size_t> pick_x(0, shape.nx - 1);
  const std::size_t nu = shape.nu();
  Point cur;
  cur.mass.resize(shape.slices() * nu);
  cur.table.resize(shape.slices() * nu);
  for (std::size_t s = 0; s < shape.slices(); ++s) {
    double total = 0;
    for (std::size_t u = 0; u < nu; ++u) total += cur.mass[s * nu + u] = expo(rng);
    for (std::size_t u = 0; u < nu; ++u) cur.mass[s * nu + u] /= total;
  }
  for (auto& x : cur.table) x = pick_x(rng);

  Evaluator eval(scenario, shape);
  double score = eval.score(cur);
  std::uniform_int_distribution<std::size_t> pick_cell(0, cur.mass.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_u(0, nu - 1);
  const double fractions[] = {1.0, 0.5, 0.25, 0.1, 0.02};
  std::uniform_int_distribution<std::size_t> pick_frac(0, std::size(fractions) - 1);
  std::uniform_int_distribution<int> pick_move(0, 2);

  while (eval.count() < budget) {
    if (shape.nx > 1 && pick_move(rng) == 0) {
      // Try every input symbol at one table entry.
      const std::size_t cell = pick_cell(rng);
      const std::size_t original = cur.table[cell];
      std::size_t best_x = original;
      for (std::size_t x = 0; x < shape.nx && eval.count() < budget; ++x) {
        if (x == original) continue;
        cur.table[cell] = x;
        const double s = eval.score(cur);
        if (s >= score) {
          score = s;
          best_x = x;
        }
      }
      cur.table[cell] = best_x;
    } else if (nu > 1) {
      // Move a fraction of mass between two cells of one slice.
      const std::size_t slice = pick_cell(rng) / nu;
      const std::size_t from = slice * nu + pick_u(rng), to = slice * nu + pick_u(rng);
      if (from == to || cur.mass[from] <= 0) continue;
      const double d = cur.mass[from] * fractions[pick_frac(rng)];
      Point next = cur;
      next.mass[from] -= d;
      next.mass[to] += d;
      const double s = eval.score(next);
      if (s >= score) {
        score = s;
        cur = std::move(next);
      }
    } else if (shape.nx == 1) {
      break;
    }
  }
  return {std::move(cur), score, eval.count()};
}

}  // namespace

std::size_t suggested_u0_cardinality(const ScenarioSpec& scenario) {
  const std::size_t s = scenario.source.cell_count();
  const std::size_t y = scenario.channel.outcome_cells();
  return std::min(scenario.x_size() * s + 4, y * s + 4);
}

SearchResult search_feasible_aux(const ScenarioSpec& scenario, const SearchOptions& options) {
  scenario.validate();
  const auto& [c0, c1, c2] = options.cardinalities;
  if (c0 == 0 || c1 == 0 || c2 == 0) throw RegionError("cardinalities must be at least 1");
  if (options.budget == 0 || options.restarts == 0) throw RegionError("search budget must be at least 1");
  const Shape shape{scenario.source.variable("S1").alphabet_size, scenario.source.variable("S2").alphabet_size,
                    c0, c1, c2, scenario.x_size()};

  const double maps = std::pow(static_cast<double>(shape.nx), static_cast<double>(shape.slices()));
  if (shape.nu() == 1 && maps <= static_cast<double>(options.budget * options.restarts)) {
    // Only the x map is free: enumerate all of them in lexicographic order.
    Evaluator eval(scenario, shape);
    Point p{std::vector<double>(shape.slices(), 1.0), std::vector<std::size_t>(shape.slices(), 0)};
    Point best = p;
    double best_score = -std::numeric_limits<double>::infinity();
    while (true) {
      const double s = eval.score(p);
      if (s > best_score) {
        best_score = s;
        best = p;
      }
      std::size_t k = shape.slices();
      while (k > 0 && ++p.table[k - 1] == shape.nx) p.table[--k] = 0;
      if (k == 0) break;
    }
    auto aux = eval.aux(best);
    auto report = eval_theorem2(scenario, aux);
    return {std::move(aux), std::move(report), best_score, eval.count()};
  }

  std::vector<RestartResult> results(options.restarts);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r; (r = next.fetch_add(1)) < options.restarts;) {
      results[r] = run_restart(scenario, shape, options.budget, mix64(options.seed ^ mix64(r + 1)));
    }
  };
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, options.restarts);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t best = 0, evaluations = 0;
  for (std::size_t r = 0; r < results.size(); ++r) {
    evaluations += results[r].evaluations;
    if (results[r].score > results[best].score) best = r;
  }
  Evaluator eval(scenario, shape);
  auto aux = eval.aux(results[best].best);
  auto report = eval_theorem2(scenario, aux);
  return {std::move(aux), std::move(report), results[best].score, evaluations};
}

}  // namespace csbc::regions
