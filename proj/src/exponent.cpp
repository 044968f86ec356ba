#include "vexlab/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vexlab {

ExponentField::ExponentField(ArrayXd values, std::optional<double> p_inf,
                             std::optional<double> const_outside_r)
    : values_(std::move(values)), p_inf_(p_inf), const_outside_r_(const_outside_r) {
  if (values_.size() == 0) throw std::invalid_argument("empty exponent field");
  p_minus_ = values_.minCoeff();
  p_plus_ = values_.maxCoeff();
  if (!(p_minus_ > 1.0) || !std::isfinite(p_plus_))
    throw std::invalid_argument("exponent must satisfy 1 < p- <= p+ < inf");
}

ExponentField ExponentField::constant(double p, Index n) {
  return ExponentField(ArrayXd::Constant(n, p));
}

ExponentField ExponentField::conjugate() const {
  ArrayXd conj = values_ / (values_ - 1.0);
  std::optional<double> ci;
  if (p_inf_) ci = *p_inf_ / (*p_inf_ - 1.0);
  return ExponentField(std::move(conj), ci, const_outside_r_);
}

std::pair<double, CriterionVerdict> log_holder_constant(const ExponentField& p,
                                                        const MetricMeasureSpace& X) {
  if (p.size() != X.size()) throw std::invalid_argument("exponent/space length mismatch");
  double a_est = 0;
  long pairs = 0;
  for (Index i = 0; i < X.size(); ++i) {
    const ArrayXd d = X.dist_row(i);
    for (Index j = i + 1; j < X.size(); ++j) {
      if (!(d[j] <= 0.5) || d[j] <= 0) continue;
      ++pairs;
      a_est = std::max(a_est, std::abs(p[i] - p[j]) * std::log(1.0 / d[j]));
    }
  }
  CriterionVerdict v;
  v.name = "log_holder";
  v.citation = "|p(x)-p(y)| <= A / ln(1/d(x,y)) for d(x,y) <= 1/2";
  v.add("A_est", a_est);
  v.add("pairs", static_cast<double>(pairs));
  v.satisfied = pairs == 0 ? Status::unknown : Status::pass;
  if (pairs == 0) v.note = "no pairs within distance 1/2";
  return {a_est, v};
}

CriterionVerdict log_holder_two_level(const ExponentField& p_coarse,
                                      const MetricMeasureSpace& coarse,
                                      const ExponentField& p_fine, const MetricMeasureSpace& fine,
                                      double growth_tol) {
  const double a0 = log_holder_constant(p_coarse, coarse).first;
  const double a1 = log_holder_constant(p_fine, fine).first;
  CriterionVerdict v;
  v.name = "log_holder_stability";
  v.citation = "witness A_est stays bounded under grid refinement";
  v.add("A_coarse", a0);
  v.add("A_fine", a1);
  const double growth = a0 > 0 ? a1 / a0 : (a1 > 0 ? 1e300 : 1.0);
  v.add("growth", growth);
  v.satisfied = growth <= growth_tol ? Status::pass : Status::fail;
  return v;
}

double estimate_p_inf(const ArrayXd& values, const MetricMeasureSpace& X) {
  const ArrayXd d = X.origin_distance();
  ArrayXd sorted = d;
  std::sort(sorted.data(), sorted.data() + sorted.size());
  const double cutoff = sorted[static_cast<Index>(0.9 * (sorted.size() - 1))];
  double num = 0, den = 0;
  for (Index i = 0; i < X.size(); ++i)
    if (d[i] >= cutoff) {
      num += values[i] * X.mass()[i];
      den += X.mass()[i];
    }
  if (den == 0) throw std::runtime_error("cannot estimate p at infinity: outer decile massless");
  return num / den;
}

std::pair<double, CriterionVerdict> decay_constant_at_infinity(const ExponentField& p,
                                                               const MetricMeasureSpace& X) {
  if (!X.truncated_unbounded())
    throw std::invalid_argument("decay constant at infinity needs a truncated-unbounded space");
  const double p_inf = p.p_inf() ? *p.p_inf() : estimate_p_inf(p.values(), X);
  const ArrayXd d = X.origin_distance();
  double a_est = 0;
  for (Index i = 0; i < X.size(); ++i)
    a_est = std::max(a_est, std::abs(p[i] - p_inf) * std::log(2.0 + d[i]));
  CriterionVerdict v;
  v.name = "decay_at_infinity";
  v.citation = "|p(x)-p(inf)| <= A / ln(2+|x|)";
  v.add("A_est", a_est);
  v.add("p_inf", p_inf);
  v.satisfied = Status::pass;
  return {a_est, v};
}

CriterionVerdict hardy_class_check(const ArrayXd& p_values, const MetricMeasureSpace& halfline,
                                   std::optional<double> p0, std::optional<double> p_inf) {
  if (p_values.size() != halfline.size()) throw std::invalid_argument("exponent/space length mismatch");
  const ArrayXd x = halfline.coords().col(0).array();
  Index inner = 0, outer = 0;
  for (Index i = 1; i < x.size(); ++i) {
    if (x[i] < x[inner]) inner = i;
    if (x[i] > x[outer]) outer = i;
  }
  const double v0 = p0 ? *p0 : p_values[inner];
  const double vi = p_inf ? *p_inf : estimate_p_inf(p_values, halfline);

  double a0 = 0, ai = 0;
  for (Index i = 0; i < x.size(); ++i) {
    if (x[i] > 0 && x[i] <= 0.5) a0 = std::max(a0, std::abs(p_values[i] - v0) * std::log(1.0 / x[i]));
    if (x[i] >= 2.0) ai = std::max(ai, std::abs(p_values[i] - vi) * std::log(x[i]));
  }
  CriterionVerdict v;
  v.name = "hardy_exponent_class";
  v.citation = "p has limits at 0 and infinity with log decay, inf p >= 1";
  v.add("p0", v0);
  v.add("p_inf", vi);
  v.add("A0", a0);
  v.add("A_inf", ai);
  const double pmin = p_values.minCoeff();
  v.add("p_min", pmin);
  if (pmin < 1.0) {
    v.satisfied = Status::fail;
    v.note = "inf p < 1";
  } else if (!(x > 0).all()) {
    v.satisfied = Status::unknown;
    v.note = "grid not contained in (0, R]";
  } else {
    v.satisfied = Status::pass;
  }
  return v;
}

}  // namespace vexlab
