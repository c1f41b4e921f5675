#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "csbc/measures/joint_pmf.hpp"

namespace csbc::simcode {

using measures::FiniteVariable;
using measures::JointPmf;

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public SimError {
 public:
  using SimError::SimError;
};

using Sequence = std::vector<std::uint8_t>;

struct TypicalityParams {
  std::size_t n = 8;
  /// Decoding typicality.
  double eps = 0.2;
  /// Encoding typicality; must be below eps.
  double eps_prime = 0.1;

  void validate() const;
};

/// Slack for floating comparisons in |pi - p| <= eps * p.
inline constexpr double kTypicalityTol = 1e-12;

/// Joint type of equal-length sequences (one per variable, in order).
JointPmf empirical_pmf(const std::vector<FiniteVariable>& variables, const std::vector<Sequence>& sequences);

/// |pi(cell) - p(cell)| <= eps * p(cell) at every cell; p = 0 cells must be empty.
bool is_typical(const std::vector<Sequence>& sequences, const JointPmf& pmf, double eps);

/**
 * Incremental typicality test for length-n sequences against a fixed pmf.
 *
 * Every cell gets an admissible count range; a partial sequence can be
 * rejected as soon as a count passes its upper limit, and a complete one is
 * typical iff every count is within range.
 */
class TypicalityChecker {
 public:
  TypicalityChecker(const JointPmf& pmf, double eps, std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t cells() const { return hi_.size(); }
  const std::vector<std::size_t>& radix() const { return radix_; }
  std::uint32_t upper(std::size_t cell) const { return hi_[cell]; }
  /// Complete count vector is within range everywhere.
  bool within(const std::vector<std::uint32_t>& counts) const;

  /// Cell of a symbol tuple (first variable most significant).
  std::size_t cell_of(const std::uint8_t* symbols) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < radix_.size(); ++k) c = c * radix_[k] + symbols[k];
    return c;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> radix_;
  std::vector<std::uint32_t> lo_, hi_;
  std::vector<std::size_t> lower_bounded_;
};

/// Counts with undo, for incremental candidate checks.
class CountState {
 public:
  explicit CountState(const TypicalityChecker& checker) : checker_(&checker), counts_(checker.cells(), 0) {}

  /// Adds one symbol tuple; false (and no change) if it would exceed the upper limit.
  bool push(std::size_t cell) {
    if (counts_[cell] + 1 > checker_->upper(cell)) return false;
    ++counts_[cell];
    trail_.push_back(cell);
    return true;
  }
  void pop() {
    --counts_[trail_.back()];
    trail_.pop_back();
  }
  void clear() {
    for (auto c : trail_) --counts_[c];
    trail_.clear();
  }
  std::size_t depth() const { return trail_.size(); }
  bool complete_and_typical() const { return trail_.size() == checker_->n() && checker_->within(counts_); }

 private:
  const TypicalityChecker* checker_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::size_t> trail_;
};

}  // namespace csbc::simcode
