#ifndef VEXLAB_LEBESGUE_HPP
#define VEXLAB_LEBESGUE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "vexlab/exponent.hpp"
#include "vexlab/space.hpp"

namespace vexlab {

/// Sum of |f(x)|^p(x) mass(x) over positive-mass points. Exponent values
/// only need p >= 1 here (the norm functional is defined down to 1).
double modular_raw(const ArrayXd& abs_f, const ArrayXd& p_values, const ArrayXd& mass);

double modular(const ArrayXd& abs_f, const ExponentField& p, const MetricMeasureSpace& X);

template <typename Derived>
ArrayXd abs_values(const Eigen::ArrayBase<Derived>& f) {
  return f.abs().template cast<double>();
}

template <typename Derived>
double modular(const Eigen::ArrayBase<Derived>& f, const ExponentField& p,
               const MetricMeasureSpace& X) {
  return modular(abs_values(f), p, X);
}

struct NormResult {
  double value = 0;
  double residual = 0;  // |modular(f / value) - 1| for nonzero f
  int iterations = 0;
  std::pair<double, double> bracket{0, 0};
};

NormResult luxemburg_norm_raw(const ArrayXd& abs_f, const ArrayXd& p_values, const ArrayXd& mass);

/// The norm inf{ lambda > 0 : modular(f/lambda) <= 1 }, solved by geometric
/// bracketing plus bisection on the strictly decreasing map
/// lambda -> modular(f/lambda).
NormResult luxemburg_norm(const ArrayXd& abs_f, const ExponentField& p,
                          const MetricMeasureSpace& X);

template <typename Derived>
NormResult luxemburg_norm(const Eigen::ArrayBase<Derived>& f, const ExponentField& p,
                          const MetricMeasureSpace& X) {
  return luxemburg_norm(abs_values(f), p, X);
}

/// Weighted norm ||rho f||: rho = 0 where f != 0 contributes nothing;
/// non-finite products are rejected.
template <typename Derived>
NormResult weighted_norm(const Eigen::ArrayBase<Derived>& f, const ArrayXd& rho,
                         const ExponentField& p, const MetricMeasureSpace& X) {
  ArrayXd g = abs_values(f);
  if (g.size() != rho.size()) throw std::invalid_argument("weight/function length mismatch");
  for (Index i = 0; i < g.size(); ++i) {
    if (X.mass()[i] == 0) {
      g[i] = 0;
      continue;
    }
    g[i] = g[i] == 0 ? 0.0 : rho[i] * g[i];
    if (!std::isfinite(g[i]))
      throw std::invalid_argument("non-finite weighted value at point " + std::to_string(i));
  }
  return luxemburg_norm(g, p, X);
}

struct HolderReport {
  double lhs = 0, rhs = 0, k = 0;
  bool pass = false;
};

/// int |f g| dmu against k ||f||_p ||g||_p' with k = 1/p- + 1/p'-.
template <typename D1, typename D2>
HolderReport holder_check(const Eigen::ArrayBase<D1>& f, const Eigen::ArrayBase<D2>& g,
                          const ExponentField& p, const MetricMeasureSpace& X) {
  HolderReport rep;
  rep.lhs = (abs_values(f) * abs_values(g) * X.mass()).sum();
  const ExponentField q = p.conjugate();
  rep.k = 1.0 / p.p_minus() + 1.0 / q.p_minus();
  rep.rhs = rep.k * luxemburg_norm(f, p, X).value * luxemburg_norm(g, q, X).value;
  rep.pass = rep.lhs <= rep.rhs + 1e-12;
  return rep;
}

/// ||f||_s / ||f||_p for 1 <= s(x) <= p(x) on a finite-measure space; across
/// a corpus the largest ratio witnesses the embedding constant.
template <typename Derived>
double embedding_ratio(const Eigen::ArrayBase<Derived>& f, const ArrayXd& s_values,
                       const ExponentField& p, const MetricMeasureSpace& X) {
  if (s_values.size() != p.size()) throw std::invalid_argument("exponent length mismatch");
  if ((s_values < 1.0).any() || (s_values > p.values()).any())
    throw std::invalid_argument("embedding needs 1 <= s(x) <= p(x) pointwise");
  const ArrayXd g = abs_values(f);
  const double ns = luxemburg_norm_raw(g, s_values, X.mass()).value;
  const double np = luxemburg_norm_raw(g, p.values(), X.mass()).value;
  if (np == 0) return 0;
  return ns / np;
}

}  // namespace vexlab

#endif
