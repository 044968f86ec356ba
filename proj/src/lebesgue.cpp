#include "vexlab/lebesgue.hpp"

#include <algorithm>

namespace vexlab {

double modular_raw(const ArrayXd& abs_f, const ArrayXd& p_values, const ArrayXd& mass) {
  if (abs_f.size() != p_values.size() || abs_f.size() != mass.size())
    throw std::invalid_argument("modular: length mismatch");
  double acc = 0;
  for (Index i = 0; i < abs_f.size(); ++i) {
    if (mass[i] == 0) continue;
    if (!std::isfinite(abs_f[i]))
      throw std::invalid_argument("non-finite function value at point " + std::to_string(i));
    if (abs_f[i] == 0) continue;
    acc += std::pow(abs_f[i], p_values[i]) * mass[i];
  }
  return acc;
}

double modular(const ArrayXd& abs_f, const ExponentField& p, const MetricMeasureSpace& X) {
  return modular_raw(abs_f, p.values(), X.mass());
}

NormResult luxemburg_norm_raw(const ArrayXd& abs_f, const ArrayXd& p_values,
                              const ArrayXd& mass) {
  NormResult res;
  // Rescale by a power of two so |f| <= 1: exact in floating point, so the
  // norm stays exactly homogeneous and |f|^p(x) cannot overflow.
  double peak = 0;
  for (Index i = 0; i < abs_f.size(); ++i)
    if (mass[i] > 0) peak = std::max(peak, abs_f[i]);
  if (peak == 0) return res;  // zero a.e. on positive-mass points
  if (!std::isfinite(peak)) throw std::invalid_argument("non-finite function value");
  const double scale = std::exp2(std::ceil(std::log2(peak)));
  if (scale != 1.0) {
    NormResult inner = luxemburg_norm_raw(abs_f / scale, p_values, mass);
    inner.value *= scale;
    inner.bracket.first *= scale;
    inner.bracket.second *= scale;
    return inner;
  }
  const double m = modular_raw(abs_f, p_values, mass);
  if (m == 0) return res;

  const double p_lo = p_values.minCoeff();
  const double p_hi = p_values.maxCoeff();
  // modular(f/lambda) lies between m/lambda^p_lo and m/lambda^p_hi, so the
  // norm sits between the two constant-exponent solutions of m/lambda^p = 1.
  double lam_a = std::pow(m, 1.0 / p_hi);
  double lam_b = std::pow(m, 1.0 / p_lo);
  if (lam_a > lam_b) std::swap(lam_a, lam_b);

  auto mod_at = [&](double lam) { return modular_raw(abs_f / lam, p_values, mass); };

  int it = 0;
  double f_a = mod_at(lam_a);
  while (f_a < 1.0 && it < 200) {  // expand downward until modular >= 1
    lam_b = lam_a;
    lam_a /= 2;
    f_a = mod_at(lam_a);
    ++it;
  }
  double f_b = mod_at(lam_b);
  while (f_b > 1.0 && it < 200) {  // expand upward until modular <= 1
    lam_a = lam_b;
    lam_b *= 2;
    f_b = mod_at(lam_b);
    ++it;
  }
  if (!(mod_at(lam_a) >= 1.0) || !(mod_at(lam_b) <= 1.0))
    throw std::runtime_error("luxemburg norm: failed to bracket the unit modular");

  while ((lam_b - lam_a) > 1e-12 * lam_b && it < 200) {
    const double mid = 0.5 * (lam_a + lam_b);
    if (mod_at(mid) <= 1.0)
      lam_b = mid;
    else
      lam_a = mid;
    ++it;
  }
  res.value = lam_b;  // upper end keeps modular(f/value) <= 1
  res.residual = std::abs(mod_at(lam_b) - 1.0);
  res.iterations = it;
  res.bracket = {lam_a, lam_b};
  return res;
}

NormResult luxemburg_norm(const ArrayXd& abs_f, const ExponentField& p,
                          const MetricMeasureSpace& X) {
  return luxemburg_norm_raw(abs_f, p.values(), X.mass());
}

}  // namespace vexlab
