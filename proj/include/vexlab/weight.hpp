#ifndef VEXLAB_WEIGHT_HPP
#define VEXLAB_WEIGHT_HPP

#include <functional>
#include <optional>
#include <variant>

#include "vexlab/space.hpp"
#include "vexlab/verdict.hpp"

namespace vexlab {

/// Scaling exponents of a weight, estimated or closed-form.
/// `shift` records the power normalization t^shift needed to make the
/// sampled weight almost increasing (0 when none was needed).
struct IndexPair {
  double m = 0;
  double M = 0;
  double shift = 0;
  double band_lo = 0, band_hi = 0;  // h-range the estimate used (0 for exact)
};

/// One radial weight factor w(t), positive on the interior of its domain:
/// (0, ell] for local behavior or [ell, inf) for behavior at infinity.
///
/// Tagged analytic forms keep closed-form indices exact; everything else is
/// estimated from scaling ratios w(ht)/w(h).
class WeightModel {
 public:
  struct PowerLaw { double a; };
  struct PowerLog { double a, b; };  // t^a ln(e/t)^b near 0, t^a ln(e+t)^b at infinity
  struct Custom { std::function<double(double)> fn; };
  struct Sampled { ArrayXd t, v; };

  static WeightModel power(double a, double ell = 1.0, bool at_infinity = false);
  static WeightModel power_log(double a, double b, double ell = 1.0, bool at_infinity = false);
  static WeightModel custom(std::function<double(double)> fn, double ell = 1.0,
                            bool at_infinity = false);
  static WeightModel sampled(ArrayXd t, ArrayXd v, bool at_infinity = false);

  double operator()(double t) const;
  /// ln w(t) from ln t; safe at extreme scales for the analytic forms.
  double log_value(double log_t) const;

  bool at_infinity() const { return at_infinity_; }
  double ell() const { return ell_; }
  bool is_power() const { return std::holds_alternative<PowerLaw>(form_); }
  bool is_power_family() const {
    return is_power() || std::holds_alternative<PowerLog>(form_);
  }
  const std::variant<PowerLaw, PowerLog, Custom, Sampled>& form() const { return form_; }

  WeightModel shifted(double a) const;    // t^a w(t)
  WeightModel powed(double lambda) const; // w(t)^lambda
  /// w(1/t): maps a weight at infinity to one near zero and vice versa.
  WeightModel reflected() const;

 private:
  WeightModel(std::variant<PowerLaw, PowerLog, Custom, Sampled> form, double ell,
              bool at_infinity)
      : form_(std::move(form)), ell_(ell), at_infinity_(at_infinity) {}
  std::variant<PowerLaw, PowerLog, Custom, Sampled> form_;
  double ell_;
  bool at_infinity_;
};

/// Lower/upper scaling indices of w near 0. Closed-form for the tagged
/// power/power-log families, estimated otherwise.
IndexPair mo_indices(const WeightModel& w);
/// Always runs the scaling-ratio estimator, regardless of tag.
IndexPair mo_indices_numeric(const WeightModel& w);

/// Indices at infinity (domain [ell, inf)).
IndexPair mo_indices_at_infinity(const WeightModel& w);
IndexPair mo_indices_at_infinity_numeric(const WeightModel& w);

/// Smallest C with w(x) <= C w(y) for x <= y over a geometric sample grid.
double almost_increasing_witness(const WeightModel& w, int samples = 64);
/// Coarse-grid search for a with t^a w(t) almost increasing on samples.
double shift_to_almost_increasing(const WeightModel& w, double witness_cap = 8.0);

/// Integral condition near zero:  int_0^h w(t) t^(-1-alpha) dt <= c w(h) h^(-alpha).
CriterionVerdict zygmund_check_lower(const WeightModel& w, double alpha, double ell);
/// Integral condition away from zero:  int_h^ell w(t) t^(-1-beta) dt <= c w(h) h^(-beta).
CriterionVerdict zygmund_check_upper(const WeightModel& w, double beta, double ell);

/// Conjunction of the two integral conditions, with the equivalent strict
/// index-interval test alpha < m(w) <= M(w) < beta reported alongside and an
/// agreement flag (1 agree, 0.5 boundary, 0 disagree).
CriterionVerdict phi_class_check(const WeightModel& w, double alpha, double beta, double ell);

/// At-infinity analogue on [ell, inf): both integral conditions checked
/// directly and again through the reflection w(1/t); disagreement between
/// the two routes yields `unknown`.
CriterionVerdict psi_class_check(const WeightModel& w, double alpha, double beta, double ell);

/// Product of radial factors w_k(d(x, x_k)) with an optional extra factor
/// w_0(1 + d(x_origin, x)) for truncated-unbounded spaces.
struct RadialProductWeight {
  std::vector<Index> nodes;
  std::vector<WeightModel> factors;
  std::optional<WeightModel> infinity_factor;
  Index origin = 0;
};

/// Per-point weight values; points where a factor degenerates to 0 or
/// blows up are listed (value kept as 0 resp. +inf).
struct WeightField {
  ArrayXd values;
  std::vector<Index> singular_points;
};

WeightField evaluate_weight(const RadialProductWeight& rho, const MetricMeasureSpace& X);
double evaluate_weight_at(const RadialProductWeight& rho, const MetricMeasureSpace& X, Index x);

}  // namespace vexlab

#endif
