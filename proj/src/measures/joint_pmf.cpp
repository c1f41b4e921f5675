#include "csbc/measures/joint_pmf.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace csbc::measures {

namespace {

std::size_t product_size(const std::vector<FiniteVariable>& vars) {
  std::size_t cells = 1;
  for (const auto& v : vars) {
    if (v.alphabet_size == 0) throw MeasureError("variable '" + v.name + "' has an empty alphabet");
    if (cells > kMaxCells / v.alphabet_size) {
      throw MeasureError("joint alphabet exceeds the cap of 2^24 cells");
    }
    cells *= v.alphabet_size;
  }
  return cells;
}

void check_names(const std::vector<FiniteVariable>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.name.empty()) throw MeasureError("variable with empty name");
    if (!seen.insert(v.name).second) throw MeasureError("duplicate variable name '" + v.name + "'");
  }
}

}  // namespace

JointPmf::JointPmf(std::vector<FiniteVariable> variables, std::vector<double> mass)
    : variables_(std::move(variables)), mass_(std::move(mass)) {
  if (variables_.size() > kMaxVariables) {
    throw MeasureError("too many variables (" + std::to_string(variables_.size()) + " > " +
                       std::to_string(kMaxVariables) + ")");
  }
  check_names(variables_);
  const std::size_t cells = product_size(variables_);
  if (mass_.size() != cells) {
    throw MeasureError("mass has " + std::to_string(mass_.size()) + " cells, expected " +
                       std::to_string(cells));
  }
  double total = 0.0;
  for (double p : mass_) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw MeasureError("negative or non-finite probability");
    total += p;
  }
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw MeasureError("probabilities sum to " + std::to_string(total) + ", not 1");
  }
  strides_.assign(variables_.size(), 1);
  for (std::size_t i = variables_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * variables_[i].alphabet_size;
  }
}

JointPmf JointPmf::uniform(std::vector<FiniteVariable> variables) {
  const std::size_t cells = product_size(variables);
  return JointPmf(std::move(variables), std::vector<double>(cells, 1.0 / static_cast<double>(cells)));
}

bool JointPmf::has(std::string_view name) const {
  return std::any_of(variables_.begin(), variables_.end(),
                     [&](const FiniteVariable& v) { return v.name == name; });
}

std::size_t JointPmf::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  throw MeasureError("unknown variable '" + std::string(name) + "'");
}

VarSet JointPmf::names() const {
  VarSet out;
  for (const auto& v : variables_) out.push_back(v.name);
  return out;
}

std::size_t JointPmf::cell_of(std::span<const std::size_t> outcome) const {
  if (outcome.size() != variables_.size()) throw MeasureError("outcome arity mismatch");
  std::size_t cell = 0;
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (outcome[i] >= variables_[i].alphabet_size) throw MeasureError("symbol out of range");
    cell += outcome[i] * strides_[i];
  }
  return cell;
}

std::uint64_t JointPmf::mask_of(const VarSet& names) const {
  std::uint64_t mask = 0;
  for (const auto& n : names) mask |= std::uint64_t{1} << index_of(n);
  return mask;
}

std::size_t ConditionalPmf::given_cells() const {
  std::size_t c = 1;
  for (const auto& v : given) c *= v.alphabet_size;
  return c;
}

std::size_t ConditionalPmf::outcome_cells() const {
  std::size_t c = 1;
  for (const auto& v : outcome) c *= v.alphabet_size;
  return c;
}

void ConditionalPmf::validate() const {
  const std::size_t g = given_cells();
  const std::size_t o = outcome_cells();
  if (g == 0 || o == 0) throw MeasureError("conditional pmf with empty alphabet");
  if (mass.size() != g * o) {
    throw MeasureError("conditional pmf has " + std::to_string(mass.size()) + " entries, expected " +
                       std::to_string(g * o));
  }
  for (std::size_t row = 0; row < g; ++row) {
    double total = 0.0;
    for (std::size_t k = 0; k < o; ++k) {
      const double p = mass[row * o + k];
      if (!(p >= 0.0) || !std::isfinite(p)) throw MeasureError("negative conditional probability");
      total += p;
    }
    if (std::abs(total - 1.0) > kNormalizationTol) {
      throw MeasureError("conditional slice " + std::to_string(row) + " sums to " +
                         std::to_string(total));
    }
  }
}

void DeterministicMap::validate() const {
  std::size_t cells = 1;
  for (const auto& v : inputs) cells *= v.alphabet_size;
  if (table.size() != cells) {
    throw MeasureError("deterministic map has " + std::to_string(table.size()) +
                       " entries, expected " + std::to_string(cells));
  }
  for (std::size_t value : table) {
    if (value >= output.alphabet_size) throw MeasureError("deterministic map value out of range");
  }
}

}  // namespace csbc::measures
