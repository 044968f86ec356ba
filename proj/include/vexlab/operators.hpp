#ifndef VEXLAB_OPERATORS_HPP
#define VEXLAB_OPERATORS_HPP

#include <functional>
#include <optional>
#include <string>

#include "vexlab/space.hpp"

namespace vexlab {

/// Centered ball averages swept over every distinct ball: points are ordered
/// by distance from the center and prefix averages are scanned shell by
/// shell, so equidistant points always enter together.
ArrayXd maximal(const ArrayXd& f, const MetricMeasureSpace& X);

/// Ball sums scaled by muB^(alpha(x)/n - 1) with n = dim_hint; reduces to the
/// plain maximal operator as alpha -> 0.
ArrayXd fractional_maximal(const ArrayXd& f, const ArrayXd& alpha, const MetricMeasureSpace& X);

/// (I^alpha f)(x) = sum_{y != x} f(y) d(x,y)^(alpha(x)-n) mass(y)  plus the
/// closed-form self-cell term with radius mass(x)^(1/n)/2;
/// `include_diagonal = false` drops the self term for comparisons.
ArrayXd riesz_potential(const ArrayXd& f, const ArrayXd& alpha, const MetricMeasureSpace& X,
                        bool include_diagonal = true);

/// Riesz potential along a polyline with chordal kernel |t - tau|^(alpha-1).
ArrayXd curve_potential(const ArrayXd& f, const ArrayXd& alpha, const CurveSpace& curve,
                        bool include_diagonal = true);

/// H^alpha f(x) = x^(alpha-1) int_0^x f(y) y^(-alpha) dy on an ascending
/// half-line grid; the first panel integrates the local power law exactly.
ArrayXd hardy_lower(const ArrayXd& f, double alpha, const MetricMeasureSpace& halfline);

/// H_beta f(x) = x^beta int_x^inf f(y) y^(-beta-1) dy; the tail beyond the
/// grid is integrated in closed form using `tail_exponent` (f ~ f(R)(y/R)^s),
/// estimated from the outermost samples when not supplied.
ArrayXd hardy_upper(const ArrayXd& f, double beta, const MetricMeasureSpace& halfline,
                    std::optional<double> tail_exponent = 0.0);

struct EpsilonRule {
  enum class Kind { fixed, mesh_proportional } kind = Kind::mesh_proportional;
  double value = 2.0;  // epsilon itself, or the mesh multiple c (eps = c h)
};

/// Principal-value Cauchy sum (1/(pi i)) sum f(tau) dtau / (tau - t) with an
/// arc-length-symmetric exclusion window around t; dtau is the unit tangent
/// times the arc mass. Endpoints of open arcs are excluded (NaN).
Eigen::ArrayXcd cauchy_singular(const Eigen::ArrayXcd& f, const CurveSpace& curve,
                                EpsilonRule rule = {});

struct ConvolutionResult {
  ArrayXd values;
  bool decay_ok = true;   // sampled |k(y)|(1+|y|)^lambda stayed bounded
  double decay_sup = 0;
};

/// Discrete convolution sum k(x-y) f(y) mass(y) on a uniform grid. The
/// declared decay exponent is validated by sampling; failure attaches a
/// warning, the operator still applies.
ConvolutionResult convolve(const std::function<double(const Eigen::VectorXd&)>& kernel,
                           double lambda_decay, const ArrayXd& f, const MetricMeasureSpace& X);

/// Serializable operator description for configs and reports.
struct OperatorSpec {
  enum class Kind {
    identity,
    maximal,
    fractional_maximal,
    riesz_potential,
    curve_potential,
    hardy_lower,
    hardy_upper,
    cauchy_singular,
    convolution
  };
  Kind kind = Kind::identity;
  double alpha = 0;        // order (hardy_lower / potentials / fractional maximal)
  double beta = 0;         // hardy_upper order
  double lambda = 0;       // declared convolution kernel decay
  std::string kernel;      // named kernel: delta | window:<a> | power:<lambda>
  EpsilonRule eps{};

  static OperatorSpec parse(const std::string& text);
  std::string to_text() const;
};

/// Applies a spec to real samples. Curve-specific specs expect the chordal
/// metric view of the curve.
ArrayXd apply(const OperatorSpec& spec, const ArrayXd& f, const MetricMeasureSpace& X);

}  // namespace vexlab

#endif
