#include "vexlab/weight.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vexlab {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

WeightModel WeightModel::power(double a, double ell, bool at_infinity) {
  return WeightModel(PowerLaw{a}, ell, at_infinity);
}

WeightModel WeightModel::power_log(double a, double b, double ell, bool at_infinity) {
  if (!at_infinity && ell > M_E)
    throw std::invalid_argument("power-log weight near zero needs ell <= e to stay positive");
  return WeightModel(PowerLog{a, b}, ell, at_infinity);
}

WeightModel WeightModel::custom(std::function<double(double)> fn, double ell, bool at_infinity) {
  return WeightModel(Custom{std::move(fn)}, ell, at_infinity);
}

WeightModel WeightModel::sampled(ArrayXd t, ArrayXd v, bool at_infinity) {
  if (t.size() != v.size() || t.size() < 2) throw std::invalid_argument("bad weight samples");
  for (Index i = 0; i < t.size(); ++i) {
    if (!(v[i] > 0)) throw std::invalid_argument("sampled weight must be positive");
    if (i > 0 && !(t[i] > t[i - 1])) throw std::invalid_argument("weight abscissae must increase");
  }
  return WeightModel(Sampled{std::move(t), std::move(v)}, 1.0, at_infinity);
}

double WeightModel::operator()(double t) const {
  if (const auto* p = std::get_if<PowerLaw>(&form_)) {
    if (t == 0) return p->a > 0 ? 0.0 : (p->a == 0 ? 1.0 : INFINITY);
    return std::pow(t, p->a);
  }
  if (const auto* p = std::get_if<PowerLog>(&form_)) {
    const double lf = at_infinity_ ? std::log(M_E + t) : std::log(M_E / t);
    if (t == 0) return p->a > 0 ? 0.0 : (p->a == 0 && p->b == 0 ? 1.0 : INFINITY);
    return std::pow(t, p->a) * std::pow(lf, p->b);
  }
  if (const auto* p = std::get_if<Custom>(&form_)) return p->fn(t);
  const auto& s = std::get<Sampled>(form_);
  if (t <= s.t[0]) return s.v[0];
  const Index n = s.t.size();
  if (t >= s.t[n - 1]) return s.v[n - 1];
  const double* begin = s.t.data();
  const Index j = std::upper_bound(begin, begin + n, t) - begin;  // s.t[j-1] < t <= s.t[j]
  const double u = (std::log(t) - std::log(s.t[j - 1])) / (std::log(s.t[j]) - std::log(s.t[j - 1]));
  return std::exp((1 - u) * std::log(s.v[j - 1]) + u * std::log(s.v[j]));
}

double WeightModel::log_value(double log_t) const {
  if (const auto* p = std::get_if<PowerLaw>(&form_)) return p->a * log_t;
  if (const auto* p = std::get_if<PowerLog>(&form_)) {
    // ln(e/t) = 1 - ln t ; ln(e + t) ~ max(1, ln t) + log1p(...)
    double lf;
    if (at_infinity_) {
      lf = log_t > 40 ? log_t : std::log(M_E + std::exp(log_t));
    } else {
      lf = 1.0 - log_t;
      if (!(lf > 0)) throw std::domain_error("power-log weight evaluated past its domain");
    }
    return p->a * log_t + p->b * std::log(lf);
  }
  const double w = (*this)(std::exp(log_t));
  if (!(w > 0) || !std::isfinite(w)) return NAN;
  return std::log(w);
}

WeightModel WeightModel::shifted(double a) const {
  if (const auto* p = std::get_if<PowerLaw>(&form_))
    return WeightModel(PowerLaw{p->a + a}, ell_, at_infinity_);
  if (const auto* p = std::get_if<PowerLog>(&form_))
    return WeightModel(PowerLog{p->a + a, p->b}, ell_, at_infinity_);
  if (const auto* p = std::get_if<Custom>(&form_)) {
    auto fn = p->fn;
    return WeightModel(Custom{[fn, a](double t) { return std::pow(t, a) * fn(t); }}, ell_,
                       at_infinity_);
  }
  const auto& s = std::get<Sampled>(form_);
  ArrayXd v = s.v * s.t.pow(a);
  return WeightModel(Sampled{s.t, std::move(v)}, ell_, at_infinity_);
}

WeightModel WeightModel::powed(double lambda) const {
  if (const auto* p = std::get_if<PowerLaw>(&form_))
    return WeightModel(PowerLaw{lambda * p->a}, ell_, at_infinity_);
  if (const auto* p = std::get_if<PowerLog>(&form_))
    return WeightModel(PowerLog{lambda * p->a, lambda * p->b}, ell_, at_infinity_);
  if (const auto* p = std::get_if<Custom>(&form_)) {
    auto fn = p->fn;
    return WeightModel(Custom{[fn, lambda](double t) { return std::pow(fn(t), lambda); }}, ell_,
                       at_infinity_);
  }
  const auto& s = std::get<Sampled>(form_);
  ArrayXd v = s.v.pow(lambda);
  return WeightModel(Sampled{s.t, std::move(v)}, ell_, at_infinity_);
}

WeightModel WeightModel::reflected() const {
  const double new_ell = 1.0 / ell_;
  const bool new_inf = !at_infinity_;
  if (const auto* p = std::get_if<PowerLaw>(&form_))
    return WeightModel(PowerLaw{-p->a}, new_ell, new_inf);
  if (std::holds_alternative<PowerLog>(form_) || std::holds_alternative<Custom>(form_)) {
    const WeightModel self = *this;
    return WeightModel(Custom{[self](double t) { return self(1.0 / t); }}, new_ell, new_inf);
  }
  const auto& s = std::get<Sampled>(form_);
  ArrayXd t = s.t.reverse().inverse();
  ArrayXd v = s.v.reverse();
  return WeightModel(Sampled{std::move(t), std::move(v)}, new_ell, new_inf);
}

namespace {

// Scaling-ratio estimator shared by both ends of the domain. The deepest
// quarter of the h-band stands in for the limit in h; the sup/inf over the
// contraction factor t is then taken over a dyadic t-grid.
struct ScalingProbe {
  std::vector<double> log_h;  // candidate ln h values, limit direction last
};

ScalingProbe make_probe(const WeightModel& w) {
  ScalingProbe p;
  const bool inf = w.at_infinity();
  const double base = std::log(inf ? std::max(w.ell(), 1.0) : w.ell());
  int j_max = 320;
  if (const auto* s = std::get_if<WeightModel::Sampled>(&w.form())) {
    // keep h and ht inside the sampled range (24 dyadic steps of slack)
    const double span = std::log(s->t[s->t.size() - 1] / s->t[0]) / kLn2;
    j_max = std::max(8, static_cast<int>(span) - 25);
  }
  for (int j = 4; j <= j_max; ++j) p.log_h.push_back(base + (inf ? 1 : -1) * j * kLn2);
  return p;
}

double safe_log_ratio(const WeightModel& w, double log_h, double log_t) {
  const double a = w.log_value(log_h + log_t);
  const double b = w.log_value(log_h);
  if (std::isnan(a) || std::isnan(b)) return NAN;
  return a - b;
}

IndexPair estimate_indices(const WeightModel& w) {
  const ScalingProbe probe = make_probe(w);
  const std::size_t n = probe.log_h.size();
  const std::size_t band_begin = n - std::max<std::size_t>(4, n / 4);
  IndexPair out;
  out.band_lo = std::exp(probe.log_h[band_begin]);
  out.band_hi = std::exp(probe.log_h[n - 1]);
  if (out.band_lo > out.band_hi) std::swap(out.band_lo, out.band_hi);

  const bool inf = w.at_infinity();
  double m_best = -1e300;
  double M_best = 1e300;
  for (int k = 1; k <= 24; ++k) {
    // near zero: m from contractions t<1 (limsup route), M from t>1 (limsup);
    // at infinity: m from expansions t>1 (liminf), M from t>1 (limsup).
    const double lt_small = -k * kLn2;
    const double lt_big = k * kLn2;
    double sup_small = -1e300, sup_big = -1e300, inf_big = 1e300;
    for (std::size_t j = band_begin; j < n; ++j) {
      const double r_small = safe_log_ratio(w, probe.log_h[j], lt_small);
      const double r_big = safe_log_ratio(w, probe.log_h[j], lt_big);
      if (!std::isnan(r_small)) sup_small = std::max(sup_small, r_small);
      if (!std::isnan(r_big)) {
        sup_big = std::max(sup_big, r_big);
        inf_big = std::min(inf_big, r_big);
      }
    }
    if (inf) {
      if (inf_big < 1e300) m_best = std::max(m_best, inf_big / lt_big);
      if (sup_big > -1e300) M_best = std::min(M_best, sup_big / lt_big);
    } else {
      if (sup_small > -1e300) m_best = std::max(m_best, sup_small / lt_small);
      if (sup_big > -1e300) M_best = std::min(M_best, sup_big / lt_big);
    }
  }
  if (m_best <= -1e300 || M_best >= 1e300)
    throw std::runtime_error("weight not evaluable on the scaling band");
  out.m = std::min(m_best, M_best);
  out.M = std::max(m_best, M_best);
  const double witness = almost_increasing_witness(w);
  out.shift = witness <= 8.0 ? 0.0 : shift_to_almost_increasing(w);
  return out;
}

}  // namespace

IndexPair mo_indices_numeric(const WeightModel& w) {
  if (w.at_infinity()) throw std::invalid_argument("weight lives at infinity; use the at-infinity indices");
  return estimate_indices(w);
}

IndexPair mo_indices(const WeightModel& w) {
  if (w.at_infinity()) throw std::invalid_argument("weight lives at infinity; use the at-infinity indices");
  if (const auto* p = std::get_if<WeightModel::PowerLaw>(&w.form())) return {p->a, p->a, 0, 0, 0};
  if (const auto* p = std::get_if<WeightModel::PowerLog>(&w.form())) return {p->a, p->a, 0, 0, 0};
  return estimate_indices(w);
}

IndexPair mo_indices_at_infinity_numeric(const WeightModel& w) {
  if (!w.at_infinity() && !w.is_power())
    throw std::invalid_argument("weight lives near zero; use the local indices");
  WeightModel probe = w;
  if (!w.at_infinity()) probe = WeightModel::power(std::get<WeightModel::PowerLaw>(w.form()).a, 1.0, true);
  return estimate_indices(probe);
}

IndexPair mo_indices_at_infinity(const WeightModel& w) {
  if (const auto* p = std::get_if<WeightModel::PowerLaw>(&w.form())) return {p->a, p->a, 0, 0, 0};
  if (const auto* p = std::get_if<WeightModel::PowerLog>(&w.form()))
    return {p->a, p->a, 0, 0, 0};
  return mo_indices_at_infinity_numeric(w);
}

double almost_increasing_witness(const WeightModel& w, int samples) {
  // geometric sample grid over the working end of the domain
  std::vector<double> logs;
  const bool inf = w.at_infinity();
  const double base = std::log(inf ? std::max(w.ell(), 1.0) : w.ell());
  for (int j = 0; j < samples; ++j) logs.push_back(base + (inf ? 1 : -1) * 0.5 * j * kLn2);
  std::sort(logs.begin(), logs.end());
  std::vector<double> lw;
  for (double lt : logs) {
    const double v = w.log_value(lt);
    if (!std::isnan(v)) lw.push_back(v);
  }
  if (lw.size() < 2) return INFINITY;
  double worst = 0;  // log of the witness
  double suffix_min = lw.back();
  for (auto it = lw.rbegin(); it != lw.rend(); ++it) {
    suffix_min = std::min(suffix_min, *it);
    worst = std::max(worst, *it - suffix_min);
  }
  return std::exp(worst);
}

double shift_to_almost_increasing(const WeightModel& w, double witness_cap) {
  double best_a = 0, best_witness = INFINITY;
  for (double mag = 0; mag <= 5.0 + 1e-9; mag += 0.25) {
    for (double a : {mag, -mag}) {
      const double c = almost_increasing_witness(w.shifted(a));
      if (c <= witness_cap) return a;
      if (c < best_witness) {
        best_witness = c;
        best_a = a;
      }
      if (mag == 0) break;
    }
  }
  return best_a;
}

namespace {

// One geometric panel of int w(t) t^(-1-q) dt, with w approximated by the
// power law through the panel endpoints; exact for pure powers.
double panel_integral(const WeightModel& w, double log_t1, double log_t2, double q) {
  const double lw1 = w.log_value(log_t1);
  const double lw2 = w.log_value(log_t2);
  if (std::isnan(lw1) || std::isnan(lw2)) return NAN;
  const double L = log_t2 - log_t1;
  const double gamma = (lw2 - lw1) / L;
  const double u = gamma - q;
  // int_{t1}^{t2} w1 (t/t1)^gamma t^(-1-q) dt = w1 t1^(-q) expm1(u L)/u
  const double scale = std::exp(lw1 - q * log_t1);
  const double factor = std::abs(u) < 1e-12 ? L : std::expm1(u * L) / u;
  return scale * factor;
}

struct RatioSeries {
  std::vector<double> R;       // condition ratio per dyadic h, limit direction last
  bool divergent = false;      // closed-form tail failed to converge
  double tail_exponent = 0;    // local exponent at the extreme end
};

// Ratios for the near-zero condition int_0^h w t^(-1-alpha) dt / (w(h) h^-alpha),
// h = ell 2^-j descending.
RatioSeries lower_series(const WeightModel& w, double alpha, double ell, int depth = 60) {
  RatioSeries out;
  const double l0 = std::log(ell);
  // deepest tail [0, ell 2^-depth] via the local power exponent
  const double lw_deep = w.log_value(l0 - depth * kLn2);
  const double lw_deep2 = w.log_value(l0 - (depth + 1) * kLn2);
  const double gamma0 = (lw_deep - lw_deep2) / kLn2;
  out.tail_exponent = gamma0;
  double integral;  // int_0^{ell 2^-depth}
  if (gamma0 - alpha < 1e-9) {
    out.divergent = true;
    integral = 0;
  } else {
    integral = std::exp(lw_deep - alpha * (l0 - depth * kLn2)) / (gamma0 - alpha);
  }
  std::vector<double> at;  // j descending -> h ascending; build reversed
  for (int j = depth - 1; j >= 0; --j) {
    integral += panel_integral(w, l0 - (j + 1) * kLn2, l0 - j * kLn2, alpha);
    const double lh = l0 - j * kLn2;
    at.push_back(integral / std::exp(w.log_value(lh) - alpha * lh));
  }
  out.R.assign(at.rbegin(), at.rend());  // toward h -> 0 last
  return out;
}

// Ratios for int_h^ell w t^(-1-beta) dt / (w(h) h^-beta), h descending.
RatioSeries upper_series(const WeightModel& w, double beta, double ell, int depth = 60) {
  RatioSeries out;
  const double l0 = std::log(ell);
  double integral = 0;
  for (int j = 0; j < depth; ++j) {
    integral += panel_integral(w, l0 - (j + 1) * kLn2, l0 - j * kLn2, beta);
    const double lh = l0 - (j + 1) * kLn2;
    out.R.push_back(integral / std::exp(w.log_value(lh) - beta * lh));
  }
  const double lw1 = w.log_value(l0 - depth * kLn2);
  const double lw2 = w.log_value(l0 - (depth + 1) * kLn2);
  out.tail_exponent = (lw1 - lw2) / kLn2;
  return out;
}

// Ratios for the at-infinity conditions, r = ell 2^j ascending.
RatioSeries infinity_upper_series(const WeightModel& w, double beta, double ell, int depth = 60) {
  // int_r^inf (r/t)^beta w(t) dt/t = r^beta int_r^inf w t^(-1-beta) dt
  RatioSeries out;
  const double l0 = std::log(std::max(ell, 1e-300));
  const double top = l0 + depth * kLn2;
  const double lw1 = w.log_value(top);
  const double lw2 = w.log_value(top + kLn2);
  const double gamma_inf = (lw2 - lw1) / kLn2;
  out.tail_exponent = gamma_inf;
  double integral;  // int_{ell 2^depth}^inf w t^(-1-beta)
  if (beta - gamma_inf < 1e-9) {
    out.divergent = true;
    integral = 0;
  } else {
    integral = std::exp(lw1 - beta * top) / (beta - gamma_inf);
  }
  std::vector<double> at;
  for (int j = depth - 1; j >= 0; --j) {
    integral += panel_integral(w, l0 + j * kLn2, l0 + (j + 1) * kLn2, beta);
    const double lr = l0 + j * kLn2;
    at.push_back(integral / std::exp(w.log_value(lr) - beta * lr));
  }
  out.R.assign(at.rbegin(), at.rend());  // toward r -> inf last
  return out;
}

RatioSeries infinity_lower_series(const WeightModel& w, double alpha, double ell, int depth = 60) {
  // int_ell^r (r/t)^alpha w(t) dt/t = r^alpha int_ell^r w t^(-1-alpha) dt
  RatioSeries out;
  const double l0 = std::log(std::max(ell, 1e-300));
  double integral = 0;
  for (int j = 0; j < depth; ++j) {
    integral += panel_integral(w, l0 + j * kLn2, l0 + (j + 1) * kLn2, alpha);
    const double lr = l0 + (j + 1) * kLn2;
    out.R.push_back(integral / std::exp(w.log_value(lr) - alpha * lr));
  }
  const double lw1 = w.log_value(l0 + depth * kLn2);
  const double lw2 = w.log_value(l0 + (depth + 1) * kLn2);
  out.tail_exponent = (lw2 - lw1) / kLn2;
  return out;
}

// A convergent ratio sequence has geometrically dying increments; a failing
// condition keeps constant (log divergence) or growing increments.
CriterionVerdict classify_series(RatioSeries s, const std::string& name,
                                 const std::string& citation) {
  CriterionVerdict v;
  v.name = name;
  v.citation = citation;
  v.add("tail_exponent", s.tail_exponent);
  if (s.divergent) {
    v.satisfied = Status::fail;
    v.note = "integral numerically divergent at the extreme end";
    v.add("divergent", 1.0);
    return v;
  }
  const std::size_t n = s.R.size();
  double c_est = 0;
  for (double r : s.R) c_est = std::max(c_est, r);
  v.add("c_est", c_est);
  v.add("ratio_limit_end", s.R[n - 1]);
  double inc_mid = 0, inc_last = 0;
  for (std::size_t j = n / 2 - 5; j < n / 2 + 5; ++j)
    inc_mid += std::abs(s.R[j + 1] - s.R[j]);
  for (std::size_t j = n - 11; j + 1 < n; ++j) inc_last += std::abs(s.R[j + 1] - s.R[j]);
  v.add("increment_mid", inc_mid / 10);
  v.add("increment_end", inc_last / 10);
  const double rel = std::max(inc_mid, inc_last) / std::max(1e-300, s.R[n - 1]);
  if (rel < 1e-12) {
    v.satisfied = Status::pass;  // converged to rounding
    return v;
  }
  const double decay = inc_last / std::max(inc_mid, 1e-300);
  v.add("increment_decay", decay);
  v.satisfied = decay < 0.8 ? Status::pass : Status::fail;
  if (v.satisfied == Status::fail) v.note = "condition ratio keeps growing toward the limit";
  return v;
}

}  // namespace

CriterionVerdict zygmund_check_lower(const WeightModel& w, double alpha, double ell) {
  if (!((w)(ell) > 0)) throw std::invalid_argument("weight nonpositive at probe");
  return classify_series(lower_series(w, alpha, ell), "zygmund_lower",
                         "int_0^h w(t) t^(-1-alpha) dt <= c w(h) h^(-alpha)");
}

CriterionVerdict zygmund_check_upper(const WeightModel& w, double beta, double ell) {
  if (!((w)(ell) > 0)) throw std::invalid_argument("weight nonpositive at probe");
  return classify_series(upper_series(w, beta, ell), "zygmund_upper",
                         "int_h^ell w(t) t^(-1-beta) dt <= c w(h) h^(-beta)");
}

CriterionVerdict phi_class_check(const WeightModel& w, double alpha, double beta, double ell) {
  if (!(alpha < beta)) throw std::invalid_argument("need alpha < beta");
  CriterionVerdict lower = zygmund_check_lower(w, alpha, ell);
  CriterionVerdict upper = zygmund_check_upper(w, beta, ell);
  CriterionVerdict v;
  v.name = "phi_class";
  v.citation = "w in Z^alpha cap Z_beta, equivalently alpha < m(w) <= M(w) < beta";
  v.satisfied = combine_status(lower.satisfied, upper.satisfied);
  v.add("alpha", alpha);
  v.add("beta", beta);
  v.add("c_lower", lower.has_witness("c_est") ? lower.witness("c_est") : INFINITY);
  v.add("c_upper", upper.has_witness("c_est") ? upper.witness("c_est") : INFINITY);

  const IndexPair idx = mo_indices(w);
  v.add("m", idx.m);
  v.add("M", idx.M);
  CriterionVerdict itest;
  const Status s_lo = interval_status(itest, "m", idx.m, alpha, INFINITY);
  const Status s_hi = interval_status(itest, "M", idx.M, -INFINITY, beta);
  const Status index_status = combine_status(s_lo, s_hi);
  const bool quad_pass = v.satisfied == Status::pass;
  double agreement;
  if (index_status == Status::boundary)
    agreement = 0.5;
  else
    agreement = (quad_pass == (index_status == Status::pass)) ? 1.0 : 0.0;
  v.add("index_interval_pass", index_status == Status::pass ? 1.0 : 0.0);
  v.add("agreement", agreement);
  if (agreement == 0.5) v.note = "index estimate within the boundary band of an endpoint";
  if (agreement == 0.0) v.note = "integral conditions and index interval disagree";
  return v;
}

CriterionVerdict psi_class_check(const WeightModel& w, double alpha, double beta, double ell) {
  if (!(alpha < beta)) throw std::invalid_argument("need alpha < beta");
  CriterionVerdict up = classify_series(infinity_upper_series(w, beta, ell), "psi_upper",
                                        "int_r^inf (r/t)^beta w(t) dt/t <= c w(r)");
  CriterionVerdict lo = classify_series(infinity_lower_series(w, alpha, ell), "psi_lower",
                                        "int_ell^r (r/t)^alpha w(t) dt/t <= c w(r)");
  const Status direct = combine_status(up.satisfied, lo.satisfied);

  // reflected route: w(1/t) must lie in the mirror class near zero
  const WeightModel wr = w.reflected();
  CriterionVerdict r_lower = zygmund_check_lower(wr, -beta, 1.0 / ell);
  CriterionVerdict r_upper = zygmund_check_upper(wr, -alpha, 1.0 / ell);
  const Status reflected = combine_status(r_lower.satisfied, r_upper.satisfied);

  CriterionVerdict v;
  v.name = "psi_class";
  v.citation = "w in Psi(alpha, beta) at infinity; reflection w(1/t) in Phi(-beta, -alpha)";
  v.add("alpha", alpha);
  v.add("beta", beta);
  v.add("direct_pass", direct == Status::pass ? 1.0 : 0.0);
  v.add("reflected_pass", reflected == Status::pass ? 1.0 : 0.0);
  v.add("c_upper", up.has_witness("c_est") ? up.witness("c_est") : INFINITY);
  v.add("c_lower", lo.has_witness("c_est") ? lo.witness("c_est") : INFINITY);
  if (direct != reflected) {
    v.satisfied = Status::unknown;
    v.note = "direct and reflected routes disagree: direct=" + std::string(to_string(direct)) +
             " reflected=" + std::string(to_string(reflected));
  } else {
    v.satisfied = direct;
  }
  return v;
}

WeightField evaluate_weight(const RadialProductWeight& rho, const MetricMeasureSpace& X) {
  if (rho.nodes.size() != rho.factors.size())
    throw std::invalid_argument("node/factor count mismatch");
  WeightField out;
  out.values = ArrayXd::Ones(X.size());
  for (std::size_t k = 0; k < rho.nodes.size(); ++k) {
    const ArrayXd d = X.dist_row(rho.nodes[k]);
    for (Index i = 0; i < X.size(); ++i) out.values[i] *= rho.factors[k](d[i]);
  }
  if (rho.infinity_factor) {
    const ArrayXd d = X.dist_row(rho.origin);
    for (Index i = 0; i < X.size(); ++i) out.values[i] *= (*rho.infinity_factor)(1.0 + d[i]);
  }
  for (Index i = 0; i < X.size(); ++i)
    if (!(out.values[i] > 0) || !std::isfinite(out.values[i])) out.singular_points.push_back(i);
  return out;
}

double evaluate_weight_at(const RadialProductWeight& rho, const MetricMeasureSpace& X, Index x) {
  double v = 1;
  for (std::size_t k = 0; k < rho.nodes.size(); ++k) v *= rho.factors[k](X.dist(rho.nodes[k], x));
  if (rho.infinity_factor) v *= (*rho.infinity_factor)(1.0 + X.dist(rho.origin, x));
  return v;
}

}  // namespace vexlab
