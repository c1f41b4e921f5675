#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "csbc/measures/info_expression.hpp"

namespace csbc::measures {

/// Raised on malformed distributions, unknown names and dimension mismatches.
class MeasureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kNormalizationTol = 1e-12;
inline constexpr std::size_t kMaxVariables = 12;
inline constexpr std::size_t kMaxCells = std::size_t{1} << 24;

struct FiniteVariable {
  std::string name;
  std::size_t alphabet_size = 1;

  friend bool operator==(const FiniteVariable&, const FiniteVariable&) = default;
};

/**
 * Dense probability tensor over named finite variables.
 *
 * Cells are stored row-major with the first variable most significant. The
 * constructor enforces nonnegativity, normalization within kNormalizationTol,
 * distinct names and the size caps; a constructed value is immutable.
 */
class JointPmf {
 public:
  JointPmf(std::vector<FiniteVariable> variables, std::vector<double> mass);

  /// Uniform distribution over the product alphabet.
  static JointPmf uniform(std::vector<FiniteVariable> variables);

  const std::vector<FiniteVariable>& variables() const { return variables_; }
  std::span<const double> mass() const { return mass_; }
  std::size_t cell_count() const { return mass_.size(); }
  std::size_t variable_count() const { return variables_.size(); }

  bool has(std::string_view name) const;
  /// Position of a variable; throws MeasureError for unknown names.
  std::size_t index_of(std::string_view name) const;
  const FiniteVariable& variable(std::string_view name) const { return variables_[index_of(name)]; }
  VarSet names() const;

  std::size_t stride(std::size_t var_index) const { return strides_[var_index]; }
  /// Symbol of variable `var_index` in cell `cell`.
  std::size_t symbol(std::size_t cell, std::size_t var_index) const {
    return (cell / strides_[var_index]) % variables_[var_index].alphabet_size;
  }
  std::size_t cell_of(std::span<const std::size_t> outcome) const;
  double at(std::span<const std::size_t> outcome) const { return mass_[cell_of(outcome)]; }

  /// Bitmask of the named variables (bit i = variables()[i]).
  std::uint64_t mask_of(const VarSet& names) const;

 private:
  std::vector<FiniteVariable> variables_;
  std::vector<double> mass_;
  std::vector<std::size_t> strides_;
};

/**
 * Conditional pmf p(outcome | given), one normalized slice per joint value of
 * the conditioning variables; mass is row-major over (given..., outcome...).
 */
struct ConditionalPmf {
  std::vector<FiniteVariable> given;
  std::vector<FiniteVariable> outcome;
  std::vector<double> mass;

  std::size_t given_cells() const;
  std::size_t outcome_cells() const;
  /// Throws MeasureError on shape mismatch, negative entries or unnormalized slices.
  void validate() const;
};

/// Deterministic map from the joint value of `inputs` (row-major) to a symbol of `output`.
struct DeterministicMap {
  std::vector<FiniteVariable> inputs;
  FiniteVariable output;
  std::vector<std::size_t> table;

  void validate() const;
};

}  // namespace csbc::measures
