#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "csbc/measures/info_expression.hpp"
#include "csbc/measures/joint_pmf.hpp"

namespace csbc::measures {

// All quantities are in bits; 0 log 0 = 0.

/// Marginal on `keep` (variables keep their order in `pmf`).
JointPmf marginalize(const JointPmf& pmf, const VarSet& keep);

/// H(a | given). `a` must be nonempty.
double entropy(const JointPmf& pmf, const VarSet& a, const VarSet& given = {});

/// I(a; b | given), computed as H(a|given) - H(a|b,given). Overlapping a, b allowed.
double mutual_information(const JointPmf& pmf, const VarSet& a, const VarSet& b,
                          const VarSet& given = {});

/// sum_k c_k H(subset_k) evaluated on `pmf`; throws if a name is unbound.
double eval_expression(const InfoExpression& expr, const JointPmf& pmf);

/**
 * Memoized joint entropies of variable subsets of one pmf.
 *
 * Holds a reference to the pmf, which must outlive the table. The cache is
 * not synchronized; use one table per thread.
 */
class EntropyTable {
 public:
  explicit EntropyTable(const JointPmf& pmf) : pmf_(&pmf) {}

  double subset_entropy(const VarSet& subset) const { return by_mask(pmf_->mask_of(subset)); }
  double by_mask(std::uint64_t mask) const;
  double eval(const InfoExpression& expr) const;
  const JointPmf& pmf() const { return *pmf_; }

 private:
  const JointPmf* pmf_;
  mutable std::unordered_map<std::uint64_t, double> cache_;
};

/**
 * Gacs-Korner-Witsenhausen common part K = f(S1) = g(S2).
 *
 * Classes are the connected components of the bipartite support graph,
 * numbered in order of their smallest S1 symbol. Symbols with zero marginal
 * probability belong to no component and map to nullopt.
 */
struct CommonPart {
  std::vector<std::optional<std::size_t>> f;
  std::vector<std::optional<std::size_t>> g;
  std::size_t size = 0;
};

/// `source` must have exactly two variables (first plays S1, second S2).
CommonPart common_part(const JointPmf& source);

/// Product extension p(.) * w_dist(w), with W appended as the last variable.
JointPmf adjoin_independent(const JointPmf& pmf, const FiniteVariable& w,
                            const std::vector<double>& w_dist);

/// p(.) * p(outcome | given); `given` must name variables of `pmf` with equal alphabets.
JointPmf extend(const JointPmf& pmf, const ConditionalPmf& conditional);

/// Appends output = map(inputs) as a new variable.
JointPmf append_function(const JointPmf& pmf, const DeterministicMap& map);

/**
 * Source p(s1,s2), auxiliary p(u0,u1,u2|s1,s2), deterministic x(s1,s2,u0,u1,u2)
 * and channel p(y1,y2|x) composed into one joint pmf over
 * (source..., aux outcome..., x, channel outcome...).
 */
JointPmf compose_scenario(const JointPmf& source, const ConditionalPmf& aux,
                          const DeterministicMap& x_map, const ConditionalPmf& channel);

}  // namespace csbc::measures
