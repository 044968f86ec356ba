#include "vexlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vexlab {

namespace {

// Shared ball sweep: indices sorted by (distance, id), shells = runs of
// exactly equal distances. `candidate` sees the running ball (mass, |f| sum,
// alpha) after each complete shell.
template <typename Candidate>
void sweep_balls(const ArrayXd& f, const MetricMeasureSpace& X, Index center,
                 Candidate&& candidate) {
  const ArrayXd d = X.dist_row(center);
  std::vector<Index> order(X.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return d[a] < d[b] || (d[a] == d[b] && a < b);
  });
  double ball_mass = 0, ball_sum = 0;
  std::size_t k = 0;
  while (k < order.size()) {
    const double shell_d = d[order[k]];
    while (k < order.size() && d[order[k]] == shell_d) {
      const Index j = order[k];
      ball_mass += X.mass()[j];
      ball_sum += std::abs(f[j]) * X.mass()[j];
      ++k;
    }
    if (ball_mass > 0) candidate(ball_mass, ball_sum);
  }
}

}  // namespace

ArrayXd maximal(const ArrayXd& f, const MetricMeasureSpace& X) {
  if (f.size() != X.size()) throw std::invalid_argument("function/space length mismatch");
  if (!f.isFinite().all()) throw std::invalid_argument("non-finite function value");
  ArrayXd out = ArrayXd::Zero(X.size());
  for (Index x = 0; x < X.size(); ++x) {
    double best = 0;
    sweep_balls(f, X, x, [&](double m, double s) { best = std::max(best, s / m); });
    out[x] = best;
  }
  return out;
}

ArrayXd fractional_maximal(const ArrayXd& f, const ArrayXd& alpha, const MetricMeasureSpace& X) {
  if (f.size() != X.size() || alpha.size() != X.size())
    throw std::invalid_argument("function/space length mismatch");
  const double n = X.dim_hint();
  if ((alpha <= 0.0).any() || (alpha >= n).any())
    throw std::invalid_argument("fractional order must lie in (0, n)");
  ArrayXd out = ArrayXd::Zero(X.size());
  for (Index x = 0; x < X.size(); ++x) {
    const double expo = alpha[x] / n - 1.0;
    double best = 0;
    sweep_balls(f, X, x, [&](double m, double s) { best = std::max(best, std::pow(m, expo) * s); });
    out[x] = best;
  }
  return out;
}

ArrayXd riesz_potential(const ArrayXd& f, const ArrayXd& alpha, const MetricMeasureSpace& X,
                        bool include_diagonal) {
  if (f.size() != X.size() || alpha.size() != X.size())
    throw std::invalid_argument("function/space length mismatch");
  const double n = X.dim_hint();
  if ((alpha <= 0.0).any() || (alpha >= n).any())
    throw std::invalid_argument("potential order must lie in (0, n)");
  ArrayXd out = ArrayXd::Zero(X.size());
  for (Index x = 0; x < X.size(); ++x) {
    const ArrayXd d = X.dist_row(x);
    const double expo = alpha[x] - n;
    double acc = 0;
    for (Index y = 0; y < X.size(); ++y) {
      if (y == x) continue;
      if (d[y] == 0) throw std::runtime_error("coincident distinct points");
      acc += f[y] * std::pow(d[y], expo) * X.mass()[y];
    }
    if (include_diagonal && X.mass()[x] > 0) {
      const double r_self = 0.5 * std::pow(X.mass()[x], 1.0 / n);
      acc += f[x] * std::pow(r_self, expo) * X.mass()[x] * n / alpha[x];
    }
    out[x] = acc;
  }
  return out;
}

ArrayXd curve_potential(const ArrayXd& f, const ArrayXd& alpha, const CurveSpace& curve,
                        bool include_diagonal) {
  return riesz_potential(f, alpha, as_metric_space(curve), include_diagonal);
}

namespace {

// Local power exponent through two positive samples; nullopt when signs or
// zeros make a power fit meaningless.
std::optional<double> local_exponent(double x1, double g1, double x2, double g2) {
  if (!(g1 > 0) || !(g2 > 0)) return std::nullopt;
  return std::log(g2 / g1) / std::log(x2 / x1);
}

ArrayXd halfline_coords(const MetricMeasureSpace& X) {
  if (X.coords().cols() != 1) throw std::invalid_argument("half-line operator needs a 1-D grid");
  ArrayXd x = X.coords().col(0).array();
  for (Index i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw std::invalid_argument("half-line grid must be ascending");
  if (!(x[0] > 0)) throw std::invalid_argument("half-line grid must start above 0");
  return x;
}

}  // namespace

ArrayXd hardy_lower(const ArrayXd& f, double alpha, const MetricMeasureSpace& halfline) {
  const ArrayXd x = halfline_coords(halfline);
  if (f.size() != x.size()) throw std::invalid_argument("function/grid length mismatch");
  const ArrayXd g = f * x.pow(-alpha);
  // first panel [0, x0]: integrate the local power law exactly
  double integral;
  const auto gamma = local_exponent(x[0], g[0], x[1], g[1]);
  if (gamma) {
    if (*gamma <= -1.0 + 1e-9)
      throw std::domain_error("integrand not integrable at the lower end");
    integral = g[0] * x[0] / (*gamma + 1.0);
  } else {
    integral = g[0] * x[0];
  }
  ArrayXd out(x.size());
  out[0] = std::pow(x[0], alpha - 1.0) * integral;
  for (Index i = 1; i < x.size(); ++i) {
    integral += 0.5 * (g[i] + g[i - 1]) * (x[i] - x[i - 1]);
    out[i] = std::pow(x[i], alpha - 1.0) * integral;
  }
  return out;
}

ArrayXd hardy_upper(const ArrayXd& f, double beta, const MetricMeasureSpace& halfline,
                    std::optional<double> tail_exponent) {
  const ArrayXd x = halfline_coords(halfline);
  if (f.size() != x.size()) throw std::invalid_argument("function/grid length mismatch");
  const Index n = x.size();
  const ArrayXd g = f * x.pow(-beta - 1.0);
  // tail beyond the grid: f ~ f(R) (y/R)^s
  double s_tail;
  if (tail_exponent) {
    s_tail = *tail_exponent;
  } else {
    const auto s = local_exponent(x[n - 2], std::abs(f[n - 2]), x[n - 1], std::abs(f[n - 1]));
    if (!s) s_tail = 0.0;
    else s_tail = *s;
    if (s_tail >= beta - 0.05)
      throw std::domain_error("non-integrable tail without analytic tag");
  }
  if (s_tail >= beta) throw std::domain_error("non-integrable tail: decay exponent >= beta");
  double integral = f[n - 1] * std::pow(x[n - 1], -beta) / (beta - s_tail);
  ArrayXd out(n);
  out[n - 1] = std::pow(x[n - 1], beta) * integral;
  for (Index i = n - 2; i >= 0; --i) {
    // panel [x_i, x_{i+1}] of g, exact for power-law data
    const auto gamma = local_exponent(x[i], g[i], x[i + 1], g[i + 1]);
    double panel;
    if (gamma) {
      const double u = *gamma + 1.0;
      panel = std::abs(u) < 1e-12 ? g[i] * x[i] * std::log(x[i + 1] / x[i])
                                  : g[i] * x[i] * std::expm1(u * std::log(x[i + 1] / x[i])) / u;
    } else {
      panel = 0.5 * (g[i] + g[i + 1]) * (x[i + 1] - x[i]);
    }
    integral += panel;
    out[i] = std::pow(x[i], beta) * integral;
  }
  return out;
}

Eigen::ArrayXcd cauchy_singular(const Eigen::ArrayXcd& f, const CurveSpace& curve,
                                EpsilonRule rule) {
  const Index n = curve.size();
  if (f.size() != n) throw std::invalid_argument("function/curve length mismatch");
  const auto& v = curve.vertices;

  // arc-length positions and segment lengths
  const Index nseg = curve.closed ? n : n - 1;
  ArrayXd seg(nseg);
  for (Index i = 0; i < nseg; ++i) seg[i] = std::abs(v[(i + 1) % n] - v[i]);
  const double total = seg.sum();
  const double h_max = seg.maxCoeff();
  ArrayXd pos(n);
  pos[0] = 0;
  for (Index i = 1; i < n; ++i) pos[i] = pos[i - 1] + seg[i - 1];

  const double eps = rule.kind == EpsilonRule::Kind::fixed ? rule.value : rule.value * h_max;
  if (eps < h_max) throw std::invalid_argument("exclusion window below mesh resolution");

  // unit tangents; one-sided at open endpoints
  Eigen::ArrayXcd tang(n);
  for (Index i = 0; i < n; ++i) {
    std::complex<double> delta;
    if (curve.closed) {
      delta = v[(i + 1) % n] - v[(i + n - 1) % n];
    } else if (i == 0) {
      delta = v[1] - v[0];
    } else if (i == n - 1) {
      delta = v[n - 1] - v[n - 2];
    } else {
      delta = v[i + 1] - v[i - 1];
    }
    tang[i] = delta / std::abs(delta);
  }

  const std::complex<double> pi_i(0.0, M_PI);
  Eigen::ArrayXcd out(n);
  for (Index i = 0; i < n; ++i) {
    if (!curve.closed && (i == 0 || i == n - 1)) {
      out[i] = std::complex<double>(NAN, NAN);  // open-arc endpoints excluded
      continue;
    }
    std::complex<double> acc = 0;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      double arc = std::abs(pos[j] - pos[i]);
      if (curve.closed) arc = std::min(arc, total - arc);
      // slack keeps the window symmetric when a vertex pair lands exactly on
      // the boundary but cumulative arc sums differ by rounding
      if (arc <= eps * (1.0 + 1e-9)) continue;
      acc += f[j] * tang[j] * curve.arc_mass[j] / (v[j] - v[i]);
    }
    out[i] = acc / pi_i;
  }
  return out;
}

ConvolutionResult convolve(const std::function<double(const Eigen::VectorXd&)>& kernel,
                           double lambda_decay, const ArrayXd& f, const MetricMeasureSpace& X) {
  if (f.size() != X.size()) throw std::invalid_argument("function/space length mismatch");
  const Eigen::MatrixXd& c = X.coords();
  if (c.rows() == 0) throw std::invalid_argument("convolution needs a coordinate grid");
  // translation invariance: masses equal on the interior is what uniform
  // grids provide; spacing uniformity is checked along the first axis
  {
    ArrayXd x0 = c.col(0).array();
    std::sort(x0.data(), x0.data() + x0.size());
    double step = 0;
    for (Index i = 1; i < x0.size(); ++i) {
      const double d = x0[i] - x0[i - 1];
      if (d <= 0) continue;
      if (step == 0) step = d;
      else if (std::abs(d - step) > 1e-9 * step)
        throw std::invalid_argument("convolution needs a uniform grid");
    }
  }
  ConvolutionResult res;
  res.values = ArrayXd::Zero(X.size());
  for (Index i = 0; i < X.size(); ++i) {
    double acc = 0;
    for (Index j = 0; j < X.size(); ++j) {
      const Eigen::VectorXd dxy = (c.row(i) - c.row(j)).transpose();
      acc += kernel(dxy) * f[j] * X.mass()[j];
    }
    res.values[i] = acc;
  }
  for (Index j = 0; j < X.size(); ++j) {
    const Eigen::VectorXd y = c.row(j).transpose() - c.row(0).transpose();
    const double bound = std::abs(kernel(y)) * std::pow(1.0 + y.norm(), lambda_decay);
    res.decay_sup = std::max(res.decay_sup, bound);
  }
  res.decay_ok = std::isfinite(res.decay_sup);
  if (res.decay_sup > 1e6) res.decay_ok = false;
  return res;
}

OperatorSpec OperatorSpec::parse(const std::string& text) {
  std::istringstream is(text);
  std::string kind;
  is >> kind;
  OperatorSpec s;
  auto need = [&](double& slot) {
    if (!(is >> slot)) throw std::invalid_argument("operator spec missing parameter: " + text);
  };
  if (kind == "identity") s.kind = Kind::identity;
  else if (kind == "maximal") s.kind = Kind::maximal;
  else if (kind == "fractional_maximal") { s.kind = Kind::fractional_maximal; need(s.alpha); }
  else if (kind == "riesz_potential") { s.kind = Kind::riesz_potential; need(s.alpha); }
  else if (kind == "curve_potential") { s.kind = Kind::curve_potential; need(s.alpha); }
  else if (kind == "hardy_lower") { s.kind = Kind::hardy_lower; need(s.alpha); }
  else if (kind == "hardy_upper") { s.kind = Kind::hardy_upper; need(s.beta); }
  else if (kind == "cauchy_singular") s.kind = Kind::cauchy_singular;
  else if (kind == "convolution") { s.kind = Kind::convolution; is >> s.kernel >> s.lambda; }
  else throw std::invalid_argument("unknown operator: " + kind);
  return s;
}

std::string OperatorSpec::to_text() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::identity: os << "identity"; break;
    case Kind::maximal: os << "maximal"; break;
    case Kind::fractional_maximal: os << "fractional_maximal " << alpha; break;
    case Kind::riesz_potential: os << "riesz_potential " << alpha; break;
    case Kind::curve_potential: os << "curve_potential " << alpha; break;
    case Kind::hardy_lower: os << "hardy_lower " << alpha; break;
    case Kind::hardy_upper: os << "hardy_upper " << beta; break;
    case Kind::cauchy_singular: os << "cauchy_singular"; break;
    case Kind::convolution: os << "convolution " << kernel << ' ' << lambda; break;
  }
  return os.str();
}

namespace {

std::function<double(const Eigen::VectorXd&)> named_kernel(const std::string& name) {
  if (name.rfind("window:", 0) == 0) {
    const double a = std::stod(name.substr(7));
    return [a](const Eigen::VectorXd& y) { return y.norm() <= a ? 1.0 : 0.0; };
  }
  if (name.rfind("power:", 0) == 0) {
    const double lam = std::stod(name.substr(6));
    return [lam](const Eigen::VectorXd& y) { return std::pow(1.0 + y.norm(), -lam); };
  }
  throw std::invalid_argument("unknown kernel: " + name);
}

}  // namespace

ArrayXd apply(const OperatorSpec& spec, const ArrayXd& f, const MetricMeasureSpace& X) {
  using K = OperatorSpec::Kind;
  switch (spec.kind) {
    case K::identity: return f;
    case K::maximal: return maximal(f, X);
    case K::fractional_maximal:
      return fractional_maximal(f, ArrayXd::Constant(X.size(), spec.alpha), X);
    case K::riesz_potential:
    case K::curve_potential:
      return riesz_potential(f, ArrayXd::Constant(X.size(), spec.alpha), X);
    case K::hardy_lower: return hardy_lower(f, spec.alpha, X);
    case K::hardy_upper: return hardy_upper(f, spec.beta, X);
    case K::cauchy_singular:
      throw std::invalid_argument("cauchy_singular needs the curve form, not the metric view");
    case K::convolution: {
      if (spec.kernel == "delta") return f;
      return convolve(named_kernel(spec.kernel), spec.lambda, f, X).values;
    }
  }
  throw std::logic_error("unhandled operator kind");
}

}  // namespace vexlab
