#ifndef VEXLAB_CRITERIA_HPP
#define VEXLAB_CRITERIA_HPP

#include <optional>
#include <vector>

#include "vexlab/exponent.hpp"
#include "vexlab/space.hpp"
#include "vexlab/verdict.hpp"
#include "vexlab/weight.hpp"

namespace vexlab {

/// Classical A_p witness: sup over balls of
/// (avg_B rho^p) (avg_B rho^(-p'))^(p-1). Fails with the offending ball when
/// rho vanishes inside (the dual average blows up).
CriterionVerdict muckenhoupt_classical(const ArrayXd& rho, double p_const,
                                       const MetricMeasureSpace& X, const ArrayXd& radius_grid);

/// Variable-exponent analogue:
/// sup over balls of (avg_B rho^p(y)) (avg_B rho^(-p(y)/(p_- - 1)))^(p_- - 1).
/// For constant p this reduces term by term to the classical witness.
CriterionVerdict muckenhoupt_variable(const ArrayXd& rho, const ExponentField& p,
                                      const MetricMeasureSpace& X, const ArrayXd& radius_grid);

/// Compares witnesses across two resolutions of the same setup; a witness
/// growing past `growth_tol` marks the weight inadmissible.
CriterionVerdict muckenhoupt_stability(const CriterionVerdict& coarse,
                                       const CriterionVerdict& fine, double growth_tol = 1.15);

/// Bounded space + doubling + exponent regularity + variable Muckenhoupt
/// condition, with all sub-witnesses attached.
CriterionVerdict theoremA_check(const ArrayXd& rho, const ExponentField& p,
                                const MetricMeasureSpace& X);

/// Radial product weight on a bounded space: per node
/// -m(muB)/p(x_k) < m(w_k) <= M(w_k) < m(muB)/p'(x_k), cross-validated via
/// the shifted-weight integral class.
CriterionVerdict theoremB_check(const RadialProductWeight& rho, const ExponentField& p,
                                const MetricMeasureSpace& X);

/// Truncated-unbounded version: requires p constant outside a ball, local
/// intervals per node, and the at-infinity sum interval shrunk by
/// Delta = (M_inf(muB) - m_inf(muB)) / p_inf.
CriterionVerdict theoremC_check(const RadialProductWeight& rho, const ExponentField& p,
                                const MetricMeasureSpace& X);

/// Same intervals as theoremB with the nominal dimension n in place of the
/// estimated m(muB).
CriterionVerdict euclid_maximal_check(const RadialProductWeight& rho, const ExponentField& p,
                                      const MetricMeasureSpace& X);

/// Power weights on a curve: -1/p(t_k) < beta_k < 1/p'(t_k) per node, plus
/// the at-infinity sum clause for truncated-infinite curves. Two-sided.
CriterionVerdict carleson_power_weight_check(const std::vector<double>& betas,
                                             const std::vector<Index>& nodes,
                                             std::optional<double> beta_inf,
                                             const ExponentField& p, const CurveSpace& curve);

/// Variable-order potential with a single radial weight at x0:
/// order bounds 0 < inf alpha p <= sup alpha p < n, log-continuity of alpha,
/// and alpha(x0) - n/p(x0) < m(w) <= M(w) < n/p'(x0).
CriterionVerdict potential_weight_check(const WeightModel& w, Index x0, const ArrayXd& alpha,
                                        const ExponentField& p, const MetricMeasureSpace& X);

/// Power-weight potential bounds at the origin and at infinity:
/// alpha - n/p(0) < gamma_0 < n/p'(0) and the same with p(inf), gamma_inf,
/// plus sup p < n/alpha and the inversion-regularity witness.
CriterionVerdict stein_weiss_check(double gamma0, double gamma_inf, double alpha,
                                   const ExponentField& p, const MetricMeasureSpace& X);

/// Two radial weights, one acting near 0 and one at infinity, each tested
/// against its index interval; the at-infinity side is cross-checked through
/// the integral class at infinity.
CriterionVerdict rn_potential_two_weight_check(const WeightModel& w0, const WeightModel& w_inf,
                                               double alpha, const ExponentField& p,
                                               const MetricMeasureSpace& X);

/// Curve potential with power weights: order bounds, log-continuity of the
/// order at the nodes, and alpha(t_k) - 1/p(t_k) < beta_k < 1 - 1/p(t_k).
CriterionVerdict curve_potential_weight_check(const std::vector<double>& betas,
                                              const std::vector<Index>& nodes,
                                              const ArrayXd& alpha, const ExponentField& p,
                                              const CurveSpace& curve);

/// Sharp bounds for the half-line averaging operators (two-sided):
/// alpha < min(1/p'(0), 1/p'(inf)) and beta > max(1/p(0), 1/p(inf)).
/// Supply only the clause(s) under test.
CriterionVerdict hardy_condition_check(std::optional<double> alpha, std::optional<double> beta,
                                       const ArrayXd& p_values,
                                       const MetricMeasureSpace& halfline);

/// Power weights for singular operators: -n/p(x_k) < beta_k < n/p'(x_k) per
/// node; the at-infinity sum clause additionally needs p constant outside a
/// ball.
CriterionVerdict singular_power_weight_check(const std::vector<double>& betas,
                                             const std::vector<Index>& nodes,
                                             std::optional<double> beta_inf,
                                             const ExponentField& p,
                                             const MetricMeasureSpace& X);

}  // namespace vexlab

#endif
