#ifndef VEXLAB_EXPONENT_HPP
#define VEXLAB_EXPONENT_HPP

#include <optional>

#include "vexlab/space.hpp"
#include "vexlab/verdict.hpp"

namespace vexlab {

/// Per-point variable exponent p(x) with 1 < inf p <= sup p < inf.
class ExponentField {
 public:
  explicit ExponentField(ArrayXd values, std::optional<double> p_inf = {},
                         std::optional<double> const_outside_r = {});
  static ExponentField constant(double p, Index n);

  const ArrayXd& values() const { return values_; }
  double operator[](Index i) const { return values_[i]; }
  Index size() const { return values_.size(); }
  double p_minus() const { return p_minus_; }
  double p_plus() const { return p_plus_; }
  std::optional<double> p_inf() const { return p_inf_; }
  std::optional<double> const_outside_r() const { return const_outside_r_; }

  /// Pointwise conjugate p' = p / (p - 1); an involution.
  ExponentField conjugate() const;

 private:
  ArrayXd values_;
  double p_minus_, p_plus_;
  std::optional<double> p_inf_;
  std::optional<double> const_outside_r_;
};

/// Largest |p(x)-p(y)| ln(1/d(x,y)) over pairs with d <= 1/2. Finite data can
/// only witness the constant, so the verdict always records A_est and passes
/// unless no pair qualifies (then unknown).
std::pair<double, CriterionVerdict> log_holder_constant(const ExponentField& p,
                                                        const MetricMeasureSpace& X);

/// Two-resolution stability of the witness: a jump discontinuity makes A_est
/// grow like |jump| ln(1/h) under refinement.
CriterionVerdict log_holder_two_level(const ExponentField& p_coarse,
                                      const MetricMeasureSpace& coarse,
                                      const ExponentField& p_fine, const MetricMeasureSpace& fine,
                                      double growth_tol = 1.25);

/// Largest |p(x) - p(inf)| ln(2 + |x|) on a truncated-unbounded space.
/// p(inf) is taken from the field or estimated as the mass-weighted mean
/// over the outermost decile of points.
std::pair<double, CriterionVerdict> decay_constant_at_infinity(const ExponentField& p,
                                                               const MetricMeasureSpace& X);

/// Estimate of p at infinity (mass-weighted mean over the outermost decile).
double estimate_p_inf(const ArrayXd& values, const MetricMeasureSpace& X);

/// Membership check for exponents on a half-line grid: limits at 0 and at
/// infinity with log-decay constants toward both ends, plus inf p >= 1.
/// Accepts raw values so that out-of-class exponents (dipping below 1) can
/// be rejected rather than refused at construction.
CriterionVerdict hardy_class_check(const ArrayXd& p_values, const MetricMeasureSpace& halfline,
                                   std::optional<double> p0 = {}, std::optional<double> p_inf = {});

}  // namespace vexlab

#endif
