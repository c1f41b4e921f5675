#pragma once

#include <vector>

#include "csbc/regions/evaluators.hpp"

namespace csbc::regions {

/// Auxiliaries for the channel-only regions: p(u0,u1,u2) and x(u0,u1,u2).
struct ChannelAux {
  JointPmf u_pmf;
  DeterministicMap x_map;
};

/// Joint pmf over (U0,U1,U2,X,Y1,Y2).
JointPmf compose_channel(const ConditionalPmf& channel, const ChannelAux& aux);

/**
 * Marton rows marton1..marton5 as "rate combination < bound":
 *   R0+R1 < I(U0,U1;Y1), R0+R2 < I(U0,U2;Y2),
 *   R0+R1+R2 < I(U0,U1;Y1) + I(U2;Y2|U0) - I(U1;U2|U0),
 *   R0+R1+R2 < I(U1;Y1|U0) + I(U0,U2;Y2) - I(U1;U2|U0),
 *   2R0+R1+R2 < I(U0,U1;Y1) + I(U0,U2;Y2) - I(U1;U2|U0).
 */
RegionReport specialize_marton(const ConditionalPmf& channel, const ChannelAux& aux, const RateTriple& rates);

/// Message sets as sources: S1 = (W0,W1), S2 = (W0,W2) uniform with |Wi| = m_i.
struct MartonConstruction {
  ScenarioSpec scenario;
  AuxiliarySpec aux;
  RateTriple rates;
};

/**
 * S1 symbol is w0*m1 + w1, S2 symbol w0*m2 + w2; (U0,U1,U2) independent of
 * the messages. With `u0_carries_w0` the first auxiliary becomes (U0,W0)
 * (symbol u0*m0 + w0), which makes every Theorem-2 row coincide with the
 * matching Marton row. Without it rows km1 and km2 come out tighter by R0.
 */
MartonConstruction marton_construction(const ConditionalPmf& channel, const ChannelAux& aux, std::size_t m0,
                                       std::size_t m1, std::size_t m2, bool u0_carries_w0 = true);

struct GrayWynerReport {
  /// gw1..gw4 as "bound < rate combination".
  RegionReport rows;
  /// gw.r0, gw.r1, gw.r2: R0 > I(S1,S2;V), R1 > H(S1|V), R2 > H(S2|V).
  RegionReport canonical;
};

/// `v_cond` is p(V|S1,S2).
GrayWynerReport specialize_gray_wyner(const JointPmf& source, const ConditionalPmf& v_cond, const RateTriple& links);

/**
 * Noiseless Gray-Wyner network: X = (X0,X1,X2) uniform independent links of
 * sizes x0, x1, x2 (symbol (a*x1 + b)*x2 + c), Y1 = (X0,X1), Y2 = (X0,X2),
 * U0 = (X0,V) (symbol a*|V| + v), U1 = X1, U2 = X2.
 */
struct GrayWynerConstruction {
  ScenarioSpec scenario;
  AuxiliarySpec aux;
  RateTriple links;
};

GrayWynerConstruction gray_wyner_construction(const JointPmf& source, const ConditionalPmf& v_cond, std::size_t x0,
                                              std::size_t x1, std::size_t x2);

/**
 * Rows k1.1..k1.3 for decoder 1 wanting both sources, with p(u,x) over
 * variables U, X:
 *   H(S2) < I(U;Y2), H(S1,S2) < I(U;Y2) + I(X;Y1|U), H(S1,S2) < I(X;Y1).
 */
RegionReport specialize_degraded(const ScenarioSpec& scenario, const JointPmf& ux_pmf);

/// Sources (S1,S2) -> ((S1,S2), S2) with U0 = (U,S2), U1 = X, U2 constant.
struct DegradedConstruction {
  ScenarioSpec scenario;
  AuxiliarySpec aux;
};

DegradedConstruction degraded_construction(const ScenarioSpec& scenario, const JointPmf& ux_pmf);

struct MoreCapableResult {
  /// min over inputs of I(X;Y1) - I(X;Y2) is >= -tol.
  bool more_capable = false;
  double worst_gap = 0;
  std::vector<double> worst_input;
  std::size_t grid_points = 0;
};

/// I(X;Y1) - I(X;Y2) for input distribution p_x.
double capability_gap(const ConditionalPmf& channel, const std::vector<double>& p_x);

/**
 * Minimizes the gap over the simplex grid {k/resolution}, then refines the
 * best grid point by pairwise mass moves with shrinking steps.
 */
MoreCapableResult check_more_capable(const ConditionalPmf& channel, std::size_t resolution, double tol = 1e-12);

}  // namespace csbc::regions
