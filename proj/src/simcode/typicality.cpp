#include "csbc/simcode/typicality.hpp"

#include <cmath>

namespace csbc::simcode {

void TypicalityParams::validate() const {
  if (n == 0) throw SimError("blocklength must be positive");
  if (!(eps_prime > 0) || !(eps > eps_prime)) throw SimError("need 0 < eps' < eps");
}

JointPmf empirical_pmf(const std::vector<FiniteVariable>& variables, const std::vector<Sequence>& sequences) {
  if (variables.size() != sequences.size() || sequences.empty()) {
    throw SimError("need one sequence per variable");
  }
  const std::size_t n = sequences.front().size();
  if (n == 0) throw SimError("sequences must be nonempty");
  std::size_t cells = 1;
  for (std::size_t k = 0; k < variables.size(); ++k) {
    if (sequences[k].size() != n) throw SimError("sequence length mismatch");
    cells *= variables[k].alphabet_size;
  }
  std::vector<double> mass(cells, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < variables.size(); ++k) {
      if (sequences[k][i] >= variables[k].alphabet_size) throw SimError("symbol outside alphabet of " + variables[k].name);
      c = c * variables[k].alphabet_size + sequences[k][i];
    }
    mass[c] += 1.0;
  }
  for (auto& m : mass) m /= static_cast<double>(n);
  return JointPmf(variables, std::move(mass));
}

bool is_typical(const std::vector<Sequence>& sequences, const JointPmf& pmf, double eps) {
  const auto type = empirical_pmf(pmf.variables(), sequences);
  for (std::size_t c = 0; c < pmf.cell_count(); ++c) {
    const double p = pmf.mass()[c];
    if (std::abs(type.mass()[c] - p) > eps * p + kTypicalityTol) return false;
  }
  return true;
}

TypicalityChecker::TypicalityChecker(const JointPmf& pmf, double eps, std::size_t n) : n_(n) {
  for (const auto& v : pmf.variables()) radix_.push_back(v.alphabet_size);
  const double dn = static_cast<double>(n);
  lo_.resize(pmf.cell_count());
  hi_.resize(pmf.cell_count());
  for (std::size_t c = 0; c < pmf.cell_count(); ++c) {
    const double p = pmf.mass()[c];
    // Integer counts k with |k/n - p| <= eps p (+ tolerance).
    const double slack = eps * p + kTypicalityTol;
    const double lo = std::ceil((p - slack) * dn - 1e-9);
    const double hi = std::floor((p + slack) * dn + 1e-9);
    lo_[c] = lo <= 0 ? 0 : static_cast<std::uint32_t>(lo);
    hi_[c] = p <= 0 ? 0 : static_cast<std::uint32_t>(std::min(hi, dn));
    if (lo_[c] > 0) lower_bounded_.push_back(c);
  }
}

bool TypicalityChecker::within(const std::vector<std::uint32_t>& counts) const {
  for (auto c : lower_bounded_) {
    if (counts[c] < lo_[c]) return false;
  }
  // Upper limits are enforced on every push.
  return true;
}

}  // namespace csbc::simcode
