#include "vexlab/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace vexlab {

namespace {

// sup over balls of (avg_B a(y)) (avg_B b(y))^outer, with the running ball
// built in (distance, id) order. Returns {sup, center, radius}.
struct BallSup {
  double value = 0;
  Index center = -1;
  double radius = 0;
  bool finite = true;
};

BallSup ball_product_sup(const ArrayXd& a, const ArrayXd& b, double outer,
                         const MetricMeasureSpace& X, const ArrayXd& radius_grid) {
  BallSup sup;
  for (Index c = 0; c < X.size(); ++c) {
    const ArrayXd d = X.dist_row(c);
    std::vector<Index> order(X.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(),
              [&](Index i, Index j) { return d[i] < d[j] || (d[i] == d[j] && i < j); });
    std::vector<double> dist_sorted(X.size());
    ArrayXd mu(X.size()), sa(X.size()), sb(X.size());
    double am = 0, aa = 0, ab = 0;
    for (Index k = 0; k < X.size(); ++k) {
      const Index j = order[k];
      am += X.mass()[j];
      aa += a[j] * X.mass()[j];
      ab += b[j] * X.mass()[j];
      dist_sorted[k] = d[j];
      mu[k] = am;
      sa[k] = aa;
      sb[k] = ab;
    }
    for (Index r = 0; r < radius_grid.size(); ++r) {
      const auto idx = std::lower_bound(dist_sorted.begin(), dist_sorted.end(), radius_grid[r]) -
                       dist_sorted.begin();
      if (idx == 0) continue;
      const double m = mu[idx - 1];
      if (m <= 0) continue;
      const double val = (sa[idx - 1] / m) * std::pow(sb[idx - 1] / m, outer);
      if (!(val <= sup.value)) {  // catches NaN/inf as new sup
        sup.value = val;
        sup.center = c;
        sup.radius = radius_grid[r];
      }
    }
  }
  sup.finite = std::isfinite(sup.value);
  return sup;
}

CriterionVerdict ap_verdict(const std::string& name, const std::string& citation,
                            const BallSup& sup) {
  CriterionVerdict v;
  v.name = name;
  v.citation = citation;
  v.add("witness", sup.value);
  v.add("center", static_cast<double>(sup.center));
  v.add("radius", sup.radius);
  if (!sup.finite) {
    v.satisfied = Status::fail;
    v.note = "ball average degenerates (weight vanishes or blows up on a ball)";
  } else {
    v.satisfied = Status::pass;
  }
  return v;
}

double p_at_origin(const ExponentField& p, const MetricMeasureSpace& X) {
  const ArrayXd d = X.origin_distance();
  Index best = 0;
  for (Index i = 1; i < X.size(); ++i)
    if (d[i] < d[best]) best = i;
  return p[best];
}

double p_at_infinity(const ExponentField& p, const MetricMeasureSpace& X) {
  if (p.p_inf()) return *p.p_inf();
  return estimate_p_inf(p.values(), X);
}

double conj(double p) { return p / (p - 1.0); }

}  // namespace

CriterionVerdict muckenhoupt_classical(const ArrayXd& rho, double p_const,
                                       const MetricMeasureSpace& X, const ArrayXd& radius_grid) {
  if (!(p_const > 1.0) || !std::isfinite(p_const))
    throw std::invalid_argument("classical condition needs constant p in (1, inf)");
  const ArrayXd a = rho.abs().pow(p_const);
  const ArrayXd b = rho.abs().pow(-conj(p_const));
  CriterionVerdict v =
      ap_verdict("muckenhoupt_classical",
                 "sup_B (avg_B rho^p)(avg_B rho^(-p'))^(p-1) < inf",
                 ball_product_sup(a, b, p_const - 1.0, X, radius_grid));
  v.add("p", p_const);
  return v;
}

CriterionVerdict muckenhoupt_variable(const ArrayXd& rho, const ExponentField& p,
                                      const MetricMeasureSpace& X, const ArrayXd& radius_grid) {
  const ArrayXd a = rho.abs().pow(p.values());
  const ArrayXd b = rho.abs().pow(-p.values() / (p.p_minus() - 1.0));
  CriterionVerdict v =
      ap_verdict("muckenhoupt_variable",
                 "sup_B (avg_B rho^p(y))(avg_B rho^(-p(y)/(p_- - 1)))^(p_- - 1) < inf",
                 ball_product_sup(a, b, p.p_minus() - 1.0, X, radius_grid));
  v.add("p_minus", p.p_minus());
  return v;
}

CriterionVerdict muckenhoupt_stability(const CriterionVerdict& coarse,
                                       const CriterionVerdict& fine, double growth_tol) {
  CriterionVerdict v;
  v.name = "muckenhoupt_stability";
  v.citation = "ball-average witness stays bounded under grid refinement";
  const double wc = coarse.witness("witness");
  const double wf = fine.witness("witness");
  v.add("witness_coarse", wc);
  v.add("witness_fine", wf);
  const double growth = wc > 0 ? wf / wc : INFINITY;
  v.add("growth", growth);
  if (coarse.satisfied == Status::fail || fine.satisfied == Status::fail)
    v.satisfied = Status::fail;
  else if (growth > growth_tol)
    v.satisfied = Status::fail;
  else
    v.satisfied = Status::pass;
  return v;
}

CriterionVerdict theoremA_check(const ArrayXd& rho, const ExponentField& p,
                                const MetricMeasureSpace& X) {
  CriterionVerdict v;
  v.name = "maximal_muckenhoupt_metric";
  v.citation = "bounded doubling space, regular exponent, variable Muckenhoupt weight";
  if (X.truncated_unbounded()) {
    v.satisfied = Status::fail;
    v.note = "bounded required";
    return v;
  }
  const ArrayXd radii = default_radius_grid(X);
  v.add("doubling", doubling_constant(X, radii));
  auto [a_est, lh] = log_holder_constant(p, X);
  v.add("log_holder_A", a_est);
  CriterionVerdict ap = muckenhoupt_variable(rho, p, X, radii);
  v.add("ap_witness", ap.witness("witness"));
  v.satisfied = combine_status(lh.satisfied == Status::unknown ? Status::pass : lh.satisfied,
                               ap.satisfied);
  if (ap.satisfied == Status::fail) v.note = ap.note;
  return v;
}

namespace {

// Index interval check shared by the radial-weight node conditions:
// lo < m(w) <= M(w) < hi, with boundary band on both endpoints.
Status node_interval(CriterionVerdict& v, const std::string& tag, const IndexPair& idx, double lo,
                     double hi) {
  const Status s1 = interval_status(v, tag + ".m", idx.m, lo, INFINITY);
  const Status s2 = interval_status(v, tag + ".M", idx.M, -INFINITY, hi);
  return combine_status(s1, s2);
}

}  // namespace

CriterionVerdict theoremB_check(const RadialProductWeight& rho, const ExponentField& p,
                                const MetricMeasureSpace& X) {
  CriterionVerdict v;
  v.name = "maximal_radial_weight_bounded";
  v.citation = "-m(muB)/p(x_k) < m(w_k) <= M(w_k) < m(muB)/p'(x_k)";
  if (X.truncated_unbounded()) {
    v.satisfied = Status::fail;
    v.note = "bounded required";
    return v;
  }
  for (Index node : rho.nodes)
    if (node < 0 || node >= X.size()) throw std::invalid_argument("weight node outside the space");

  const double m_mu = uniform_lower_dimension(X, default_radius_grid(X));
  v.add("m_muB", m_mu);
  Status all = Status::pass;
  for (std::size_t k = 0; k < rho.nodes.size(); ++k) {
    const IndexPair idx = mo_indices(rho.factors[k]);
    const double pk = p[rho.nodes[k]];
    const std::string tag = "w" + std::to_string(k + 1);
    all = combine_status(all, node_interval(v, tag, idx, -m_mu / pk, m_mu / conj(pk)));

    // cross-validation: t^(m(muB)/p(x_k)) w_k(t) should sit inside the
    // integral class with interval (0, m(muB))
    const double ell = std::min(1.0, X.diameter());
    CriterionVerdict phi = phi_class_check(rho.factors[k].shifted(m_mu / pk), 0.0, m_mu, ell);
    v.add(tag + ".phi_cross", phi.satisfied == Status::pass ? 1.0 : 0.0);
  }
  v.satisfied = all;
  return v;
}

CriterionVerdict euclid_maximal_check(const RadialProductWeight& rho, const ExponentField& p,
                                      const MetricMeasureSpace& X) {
  CriterionVerdict v;
  v.name = "maximal_radial_weight_euclidean";
  v.citation = "-n/p(x_k) < m(w_k) <= M(w_k) < n/p'(x_k)";
  const double n = X.dim_hint();
  v.add("n", n);
  Status all = Status::pass;
  for (std::size_t k = 0; k < rho.nodes.size(); ++k) {
    const IndexPair idx = mo_indices(rho.factors[k]);
    const double pk = p[rho.nodes[k]];
    all = combine_status(
        all, node_interval(v, "w" + std::to_string(k + 1), idx, -n / pk, n / conj(pk)));
  }
  v.satisfied = all;
  return v;
}

CriterionVerdict theoremC_check(const RadialProductWeight& rho, const ExponentField& p,
                                const MetricMeasureSpace& X) {
  CriterionVerdict v;
  v.name = "maximal_radial_weight_unbounded";
  v.citation = "local node intervals plus at-infinity sum interval shrunk by Delta_p_inf";
  if (!X.truncated_unbounded()) {
    v.satisfied = Status::fail;
    v.note = "truncated-unbounded space required";
    return v;
  }
  // hypothesis: p constant outside some ball around the origin node
  const double p_inf = p_at_infinity(p, X);
  if (!p.const_outside_r()) {
    v.satisfied = Status::fail;
    v.note = "hypothesis violated: p not declared constant outside a ball";
    return v;
  }
  {
    const ArrayXd d = X.dist_row(rho.origin);
    double dev = 0;
    for (Index i = 0; i < X.size(); ++i)
      if (d[i] > *p.const_outside_r()) dev = std::max(dev, std::abs(p[i] - p_inf));
    v.add("p_tail_deviation", dev);
    if (dev > 1e-12) {
      v.satisfied = Status::fail;
      v.note = "hypothesis violated: p varies outside the declared ball";
      return v;
    }
  }
  const ArrayXd radii = default_radius_grid(X);
  const double m_mu = uniform_lower_dimension(X, radii);
  auto [m_inf, M_inf] = dimensions_at_infinity(X, radii);
  const double delta = (M_inf - m_inf) / p_inf;
  v.add("m_muB", m_mu);
  v.add("m_inf_muB", m_inf);
  v.add("M_inf_muB", M_inf);
  v.add("delta_p_inf", delta);
  v.add("p_inf", p_inf);

  Status all = Status::pass;
  double sum_m = 0, sum_M = 0;
  if (rho.infinity_factor) {
    const IndexPair idx = mo_indices_at_infinity(*rho.infinity_factor);
    sum_m += idx.m;
    sum_M += idx.M;
    v.add("w0.m_inf", idx.m);
    v.add("w0.M_inf", idx.M);
  }
  for (std::size_t k = 0; k < rho.nodes.size(); ++k) {
    const IndexPair idx = mo_indices(rho.factors[k]);
    const double pk = p[rho.nodes[k]];
    const std::string tag = "w" + std::to_string(k + 1);
    all = combine_status(all, node_interval(v, tag, idx, -m_mu / pk, m_mu / conj(pk)));
    const IndexPair inf_idx = mo_indices_at_infinity(rho.factors[k]);
    sum_m += inf_idx.m;
    sum_M += inf_idx.M;
  }
  const double lo = -m_inf / p_inf;
  const double hi = m_inf / conj(p_inf) - delta;
  const Status s1 = interval_status(v, "sum_m_inf", sum_m, lo, INFINITY);
  const Status s2 = interval_status(v, "sum_M_inf", sum_M, -INFINITY, hi);
  v.satisfied = combine_status(all, combine_status(s1, s2));
  return v;
}

CriterionVerdict carleson_power_weight_check(const std::vector<double>& betas,
                                             const std::vector<Index>& nodes,
                                             std::optional<double> beta_inf,
                                             const ExponentField& p, const CurveSpace& curve) {
  if (betas.size() != nodes.size()) throw std::invalid_argument("beta/node count mismatch");
  CriterionVerdict v;
  v.name = "maximal_power_weight_curve";
  v.citation = "-1/p(t_k) < beta_k < 1/p'(t_k); infinite curves add the sum clause";
  v.two_sided = true;
  Status all = Status::pass;
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const double pk = p[nodes[k]];
    all = combine_status(all, interval_status(v, "beta" + std::to_string(k + 1), betas[k],
                                              -1.0 / pk, 1.0 / conj(pk)));
  }
  if (curve.truncation) {
    const MetricMeasureSpace X = as_metric_space(curve);
    const double p_inf = p_at_infinity(p, X);
    double sum = beta_inf.value_or(0.0);
    for (double b : betas) sum += b;
    v.add("p_inf", p_inf);
    all = combine_status(all,
                         interval_status(v, "beta_sum", sum, -1.0 / p_inf, 1.0 / conj(p_inf)));
  }
  v.satisfied = all;
  return v;
}

namespace {

double log_continuity_witness(const ArrayXd& field, const MetricMeasureSpace& X) {
  double a = 0;
  for (Index i = 0; i < X.size(); ++i) {
    const ArrayXd d = X.dist_row(i);
    for (Index j = i + 1; j < X.size(); ++j)
      if (d[j] > 0 && d[j] <= 0.5)
        a = std::max(a, std::abs(field[i] - field[j]) * std::log(1.0 / d[j]));
  }
  return a;
}

Status order_bounds(CriterionVerdict& v, const ArrayXd& alpha, const ExponentField& p, double n) {
  const ArrayXd ap = alpha * p.values();
  v.add("inf_alpha_p", ap.minCoeff());
  v.add("sup_alpha_p", ap.maxCoeff());
  if (!(ap.minCoeff() > 0) || !(ap.maxCoeff() < n)) return Status::fail;
  return Status::pass;
}

}  // namespace

CriterionVerdict potential_weight_check(const WeightModel& w, Index x0, const ArrayXd& alpha,
                                        const ExponentField& p, const MetricMeasureSpace& X) {
  CriterionVerdict v;
  v.name = "potential_radial_weight";
  v.citation = "alpha(x0) - n/p(x0) < m(w) <= M(w) < n/p'(x0)";
  const double n = X.dim_hint();
  const Status pre = order_bounds(v, alpha, p, n);
  if (pre == Status::fail) {
    v.satisfied = Status::fail;
    v.note = "order bounds 0 < inf alpha p <= sup alpha p < n violated";
    return v;
  }
  v.add("alpha_log_continuity", log_continuity_witness(alpha, X));
  const IndexPair idx = mo_indices(w);
  const double p0 = p[x0];
  v.satisfied = node_interval(v, "w", idx, alpha[x0] - n / p0, n / conj(p0));
  return v;
}

CriterionVerdict stein_weiss_check(double gamma0, double gamma_inf, double alpha,
                                   const ExponentField& p, const MetricMeasureSpace& X) {
  CriterionVerdict v;
  v.name = "potential_power_weight_two_ends";
  v.citation = "alpha - n/p(0) < gamma_0 < n/p'(0), alpha - n/p(inf) < gamma_inf < n/p'(inf)";
  const double n = X.dim_hint();
  v.add("sup_p", p.p_plus());
  v.add("n_over_alpha", n / alpha);
  if (!(p.p_plus() < n / alpha)) {
    v.satisfied = Status::fail;
    v.note = "prerequisite sup p < n/alpha violated";
    return v;
  }
  const double p0 = p_at_origin(p, X);
  const double pi = p_at_infinity(p, X);
  v.add("p0", p0);
  v.add("p_inf", pi);
  const Status s0 = interval_status(v, "gamma0", gamma0, alpha - n / p0, n / conj(p0));
  const Status si = interval_status(v, "gamma_inf", gamma_inf, alpha - n / pi, n / conj(pi));

  // regularity of p after inversion x -> x/|x|^2, sampled through nearest
  // grid values
  {
    const ArrayXd r = X.origin_distance();
    ArrayXd p_star(X.size());
    for (Index i = 0; i < X.size(); ++i) {
      const double target = r[i] > 0 ? 1.0 / r[i] : INFINITY;
      Index best = -1;
      double gap = INFINITY;
      for (Index j = 0; j < X.size(); ++j)
        if (std::abs(r[j] - target) < gap) {
          gap = std::abs(r[j] - target);
          best = j;
        }
      p_star[i] = target > r.maxCoeff() ? pi : p[best];
    }
    v.add("inversion_log_continuity", log_continuity_witness(p_star, X));
  }
  v.satisfied = combine_status(s0, si);
  return v;
}

CriterionVerdict rn_potential_two_weight_check(const WeightModel& w0, const WeightModel& w_inf,
                                               double alpha, const ExponentField& p,
                                               const MetricMeasureSpace& X) {
  CriterionVerdict v;
  v.name = "potential_two_weight";
  v.citation = "index intervals at 0 and infinity for the split radial weight";
  const double n = X.dim_hint();
  if (!(p.p_plus() < n / alpha)) {
    v.satisfied = Status::fail;
    v.note = "prerequisite sup p < n/alpha violated";
    return v;
  }
  const double p0 = p_at_origin(p, X);
  const double pi = p_at_infinity(p, X);
  v.add("p0", p0);
  v.add("p_inf", pi);
  const Status s0 = node_interval(v, "w0", mo_indices(w0), alpha - n / p0, n / conj(p0));
  const Status si =
      node_interval(v, "w_inf", mo_indices_at_infinity(w_inf), alpha - n / pi, n / conj(pi));
  CriterionVerdict psi =
      psi_class_check(w_inf, alpha - n / pi, n / conj(pi), std::max(w_inf.ell(), 1.0));
  v.add("psi_cross", psi.satisfied == Status::pass ? 1.0 : 0.0);
  v.satisfied = combine_status(s0, si);
  if (psi.satisfied == Status::pass && v.satisfied == Status::fail)
    v.note = "index interval and integral class disagree";
  return v;
}

CriterionVerdict curve_potential_weight_check(const std::vector<double>& betas,
                                              const std::vector<Index>& nodes,
                                              const ArrayXd& alpha, const ExponentField& p,
                                              const CurveSpace& curve) {
  if (betas.size() != nodes.size()) throw std::invalid_argument("beta/node count mismatch");
  CriterionVerdict v;
  v.name = "curve_potential_power_weight";
  v.citation = "alpha(t_k) - 1/p(t_k) < beta_k < 1 - 1/p(t_k)";
  const MetricMeasureSpace X = as_metric_space(curve);
  const Status pre = order_bounds(v, alpha, p, 1.0);
  if (pre == Status::fail) {
    v.satisfied = Status::fail;
    v.note = "order bounds 0 < inf alpha p <= sup alpha p < 1 violated";
    return v;
  }
  Status all = Status::pass;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const ArrayXd d = X.dist_row(nodes[k]);
    double a_node = 0;
    for (Index i = 0; i < X.size(); ++i)
      if (d[i] > 0 && d[i] <= 0.5)
        a_node = std::max(a_node, std::abs(alpha[i] - alpha[nodes[k]]) * std::log(1.0 / d[i]));
    const std::string tag = "beta" + std::to_string(k + 1);
    v.add(tag + ".alpha_log_continuity", a_node);
    const double pk = p[nodes[k]];
    all = combine_status(
        all, interval_status(v, tag, betas[k], alpha[nodes[k]] - 1.0 / pk, 1.0 - 1.0 / pk));
  }
  v.satisfied = all;
  return v;
}

CriterionVerdict hardy_condition_check(std::optional<double> alpha, std::optional<double> beta,
                                       const ArrayXd& p_values,
                                       const MetricMeasureSpace& halfline) {
  CriterionVerdict v;
  v.name = "hardy_sharp_bounds";
  v.citation = "alpha < min(1/p'(0), 1/p'(inf)) and beta > max(1/p(0), 1/p(inf))";
  v.two_sided = true;
  CriterionVerdict cls = hardy_class_check(p_values, halfline);
  if (cls.satisfied != Status::pass) {
    v.satisfied = cls.satisfied;
    v.note = "exponent class check: " + cls.note;
    return v;
  }
  const double p0 = cls.witness("p0");
  const double pi = cls.witness("p_inf");
  v.add("p0", p0);
  v.add("p_inf", pi);
  Status all = Status::pass;
  if (alpha) {
    const double hi = std::min(1.0 / conj(p0), 1.0 / conj(pi));
    all = combine_status(all, interval_status(v, "alpha", *alpha, -INFINITY, hi));
  }
  if (beta) {
    const double lo = std::max(1.0 / p0, 1.0 / pi);
    all = combine_status(all, interval_status(v, "beta", *beta, lo, INFINITY));
  }
  v.satisfied = all;
  return v;
}

CriterionVerdict singular_power_weight_check(const std::vector<double>& betas,
                                             const std::vector<Index>& nodes,
                                             std::optional<double> beta_inf,
                                             const ExponentField& p,
                                             const MetricMeasureSpace& X) {
  if (betas.size() != nodes.size()) throw std::invalid_argument("beta/node count mismatch");
  CriterionVerdict v;
  v.name = "singular_power_weight";
  v.citation = "-n/p(x_k) < beta_k < n/p'(x_k) plus the at-infinity sum clause";
  const double n = X.dim_hint();
  Status all = Status::pass;
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const double pk = p[nodes[k]];
    all = combine_status(all, interval_status(v, "beta" + std::to_string(k + 1), betas[k],
                                              -n / pk, n / conj(pk)));
  }
  if (beta_inf || X.truncated_unbounded()) {
    if (!p.const_outside_r()) {
      v.satisfied = Status::fail;
      v.note = "at-infinity clause needs p constant outside a ball";
      return v;
    }
    const double pi = p_at_infinity(p, X);
    double sum = beta_inf.value_or(0.0);
    for (double b : betas) sum += b;
    v.add("p_inf", pi);
    all = combine_status(all, interval_status(v, "beta_sum", sum, -n / pi, n / conj(pi)));
  }
  v.satisfied = all;
  return v;
}

}  // namespace vexlab
