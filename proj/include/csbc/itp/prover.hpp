#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "csbc/measures/info_expression.hpp"
#include "csbc/rational.hpp"

namespace csbc::itp {

using measures::InfoExpression;
using measures::VarSet;

class ProverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxGroundSet = 10;

/**
 * Ordered set of at most kMaxGroundSet random-variable names. The entropy
 * space has one coordinate per nonempty subset; subset with bitmask m
 * (bit i = names()[i]) lives at coordinate m - 1.
 */
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::size_t dimension() const { return (std::size_t{1} << names_.size()) - 1; }
  bool contains(const std::string& name) const;
  std::uint64_t mask_of(const VarSet& subset) const;
  VarSet subset_of(std::uint64_t mask) const;

  /// Coordinates of an expression; throws ProverError for names outside the set.
  std::vector<Rational> to_vector(const InfoExpression& expr) const;
  InfoExpression from_vector(const std::vector<Rational>& coords) const;

 private:
  std::vector<std::string> names_;
};

/// The standard Shannon-cone generators H(Xi | rest) >= 0 and I(Xi;Xj|K) >= 0.
/// Count is N + C(N,2) 2^(N-2) for N >= 2.
std::vector<InfoExpression> elemental_inequalities(const GroundSet& ground);

struct ProofConstraint {
  enum class Kind { FunctionalDependency, Independence, LinearEquality };

  Kind kind = Kind::LinearEquality;
  /// The constrained quantity; the constraint reads expr = 0.
  InfoExpression expr;

  /// H(a | b) = 0.
  static ProofConstraint functional_dependency(const VarSet& a, const VarSet& b);
  /// I(a; b | c) = 0.
  static ProofConstraint independence(const VarSet& a, const VarSet& b, const VarSet& c = {});
  static ProofConstraint equality(InfoExpression expr);
};

enum class Verdict { Proven, NotProvable };

/**
 * Outcome of a Shannon-provability check of `target >= 0`.
 *
 * Proven: target = sum elemental_multipliers[k] * elemental[k] +
 * sum constraint_multipliers[j] * constraint[j] exactly, with nonnegative
 * elemental multipliers. NotProvable: `counterexample` is a vector in the
 * Shannon cone (all elementals >= 0, constraints = 0) on which the target is
 * negative. It need not be entropic.
 */
struct ProofResult {
  Verdict verdict = Verdict::NotProvable;
  std::vector<Rational> elemental_multipliers;
  std::vector<Rational> constraint_multipliers;
  std::vector<Rational> counterexample;
};

ProofResult prove(const InfoExpression& target, const std::vector<ProofConstraint>& constraints,
                  const GroundSet& ground);

/// Exact recheck of a result against its inputs (either verdict).
bool verify_proof(const ProofResult& result, const InfoExpression& target,
                  const std::vector<ProofConstraint>& constraints, const GroundSet& ground);

/**
 * The right-hand sides v1..v11 of the rate system, keyed "v1".."v11":
 *   v1 = I(U0;S1,S2)                 v2 = I(U1;S2|S1)          v3 = I(U2;S1|S2)
 *   v4 = v1 + I(U1;U0,S2|S1)         v5 = v1 + I(U2;U0,S1|S2)
 *   v6 = I(U1,S1;U2,S2) - I(S1;S2)
 *   v7 = v1 + I(U1;U2|U0,S1,S2) + I(U1;U0,S2|S1) + I(U2;U0,S1|S2)
 *   v8 = I(U1,S1;U0,Y1)              v9 = I(U0,U1,S1;Y1) + I(U0;U1,S1)
 *   v10 = I(U2,S2;U0,Y2)             v11 = I(U0,U2,S2;Y2) + I(U0;U2,S2)
 * Requires U0,U1,U2,S1,S2,Y1,Y2 in the ground set.
 */
std::map<std::string, InfoExpression> expand_v_definitions(const GroundSet& ground);

/// Same definitions without a ground-set check.
std::map<std::string, InfoExpression> v_definitions();

}  // namespace csbc::itp
