#include "vexlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace vexlab {

namespace {

double nearest_gap(const MetricMeasureSpace& X, Index c) {
  const ArrayXd d = X.dist_row(c);
  double gap = INFINITY;
  for (Index i = 0; i < d.size(); ++i)
    if (i != c && d[i] < gap) gap = d[i];
  return gap;
}

ArrayXd ball_indicator(const MetricMeasureSpace& X, Index c, double r) {
  const ArrayXd d = X.dist_row(c);
  return (d < r).cast<double>();
}

void clamp_singular(ArrayXd& f, const WeightField& rho) {
  for (Index i : rho.singular_points) f[i] = 0;
}

}  // namespace

std::vector<Candidate> candidates(const WeightField& rho, const ExponentField& p,
                                  const MetricMeasureSpace& X, const std::vector<Index>& nodes,
                                  std::uint64_t seed, int budget) {
  if (budget < 1) throw std::invalid_argument("candidate budget must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, X.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const double diam = X.diameter();
  const ExponentField pc = p.conjugate();
  std::vector<Candidate> out;

  std::vector<Index> centers = nodes;
  while (centers.size() < nodes.size() + 3) centers.push_back(pick(rng));

  // dyadic radii coupled to the local mesh: 4 gaps, 16 gaps, diam/32, diam/8
  auto radii_for = [&](Index c) {
    const double gap = nearest_gap(X, c);
    std::vector<double> rs{4.0 * gap, 16.0 * gap, diam / 32.0, diam / 8.0};
    rs.erase(std::remove_if(rs.begin(), rs.end(),
                            [&](double r) { return !(r > 0) || !(r <= diam); }),
             rs.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return rs;
  };

  // extremizers at the weight nodes, then plain indicators everywhere
  for (std::size_t ci = 0; ci < centers.size(); ++ci) {
    const Index c = centers[ci];
    const bool is_node = ci < nodes.size();
    for (double r : radii_for(c)) {
      if (is_node) {
        ArrayXd f = ball_indicator(X, c, r);
        for (Index i = 0; i < X.size(); ++i)
          if (f[i] > 0) f[i] = std::pow(rho.values[i], -pc[i] / p[i]);
        clamp_singular(f, rho);
        if (f.abs().maxCoeff() > 0) {
          std::ostringstream tag;
          tag << "extremizer(c=" << c << ",r=" << r << ")";
          out.push_back({std::move(f), tag.str()});
        }
      }
      ArrayXd g = ball_indicator(X, c, r);
      clamp_singular(g, rho);
      if (g.abs().maxCoeff() > 0) {
        std::ostringstream tag;
        tag << "indicator(c=" << c << ",r=" << r << ")";
        out.push_back({std::move(g), tag.str()});
      }
    }
  }

  // smooth bumps at random centers and scales
  for (int k = 0; k < 3; ++k) {
    const Index c = pick(rng);
    const double s = diam * std::pow(2.0, -2.0 - 3.0 * unit(rng));
    ArrayXd f = (-(X.dist_row(c) / s).square()).exp();
    clamp_singular(f, rho);
    std::ostringstream tag;
    tag << "bump(c=" << c << ",s=" << s << ")";
    out.push_back({std::move(f), tag.str()});
  }

  // random-sign noise
  for (int k = 0; k < 2; ++k) {
    ArrayXd f(X.size());
    for (Index i = 0; i < X.size(); ++i) f[i] = unit(rng) < 0.5 ? -1.0 : 1.0;
    clamp_singular(f, rho);
    out.push_back({std::move(f), "noise(" + std::to_string(k) + ")"});
  }

  if (static_cast<int>(out.size()) > budget) out.resize(budget);
  return out;
}

std::optional<double> ratio(const ArrayXd& Tf, const ArrayXd& f, const ArrayXd& rho,
                            const ExponentField& p, const ExponentField& q,
                            const MetricMeasureSpace& X) {
  const double den = weighted_norm(f, rho, p, X).value;
  if (den == 0) return std::nullopt;
  return weighted_norm(Tf, rho, q, X).value / den;
}

NormEstimate estimate_operator_norm(const OperatorSpec& op, const std::vector<Candidate>& corpus,
                                    const ArrayXd& rho, const ExponentField& p,
                                    const ExponentField& q, const MetricMeasureSpace& X,
                                    int workers) {
  if (corpus.empty()) throw std::invalid_argument("empty candidate corpus");
  std::vector<std::optional<double>> ratios(corpus.size());
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const ArrayXd Tf = apply(op, corpus[i].f, X);
      ratios[i] = ratio(Tf, corpus[i].f, rho, p, q, X);
    }
  };
  if (workers <= 1) {
    run_range(0, corpus.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (corpus.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(corpus.size(), w * chunk);
      const std::size_t hi = std::min(corpus.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  NormEstimate est;
  bool any = false;
  for (std::size_t i = 0; i < corpus.size(); ++i) {  // id order: worker-count independent
    if (!ratios[i]) continue;
    any = true;
    ++est.trials;
    if (*ratios[i] > est.value) {
      est.value = *ratios[i];
      est.argmax_tag = corpus[i].tag;
    }
  }
  if (!any) throw std::runtime_error("all candidates skipped (zero weighted norms)");
  return est;
}

std::string ExperimentConfig::echo() const {
  std::ostringstream os;
  os.precision(17);
  os << "[study]\n";
  os << "name = " << name << "\n";
  os << "seed = " << seed << "\n";
  os << "budget = " << budget << "\n";
  os << "stability_ratio = " << stability_ratio << "\n";
  os << "blow_up_ratio = " << blow_up_ratio << "\n";
  os << "workers = " << workers << "\n";
  os << "[space]\n";
  os << "kind = " << space_kind << "\n";
  os << "box_lo = " << box_lo << "\n";
  os << "box_hi = " << box_hi << "\n";
  os << "grading = " << grading << "\n";
  os << "levels =";
  for (int n : levels) os << ' ' << n;
  os << "\n";
  os << "[exponent]\n";
  os << "p_const = " << p_const << "\n";
  os << "p_slope = " << p_slope << "\n";
  os << "[weight]\n";
  os << "use_weight = " << (use_weight ? 1 : 0) << "\n";
  os << "beta = " << beta << "\n";
  os << "node_coord = " << node_coord << "\n";
  if (beta_inf) os << "beta_inf = " << *beta_inf << "\n";
  os << "[operator]\n";
  os << "spec = " << op.to_text() << "\n";
  os << "q_const = " << q_const << "\n";
  os << "q_from_sobolev = " << (q_from_sobolev ? 1 : 0) << "\n";
  return os.str();
}

MetricMeasureSpace build_level_space(const ExperimentConfig& config, int n) {
  if (config.space_kind == "interval")
    return build_grid({{config.box_lo, config.box_hi}}, {n});
  if (config.space_kind == "centered")
    return build_centered_grid({{config.box_lo, config.box_hi}}, {n});
  if (config.space_kind == "interval_graded")
    return build_graded_interval(config.box_hi, n, config.grading);
  if (config.space_kind == "halfline")
    return build_halfline_grid(config.box_hi, n, config.grading);
  throw std::invalid_argument("unknown space kind for studies: " + config.space_kind);
}

ExponentField build_exponent(const ExperimentConfig& config, const MetricMeasureSpace& X) {
  ArrayXd v = ArrayXd::Constant(X.size(), config.p_const);
  if (config.p_slope != 0) v += config.p_slope * X.coords().col(0).array();
  std::optional<double> pinf;
  std::optional<double> const_r;
  if (X.truncated_unbounded()) {
    pinf = config.p_const;  // presets keep p constant toward the truncation
    const_r = config.p_slope == 0 ? std::optional<double>(0.0) : std::nullopt;
  } else if (config.p_slope == 0) {
    const_r = 0.0;
  }
  return ExponentField(std::move(v), pinf, const_r);
}

RadialProductWeight build_weight(const ExperimentConfig& config, const MetricMeasureSpace& X) {
  RadialProductWeight rho;
  const ArrayXd x = X.coords().col(0).array();
  Index node = 0;
  for (Index i = 1; i < X.size(); ++i)
    if (std::abs(x[i] - config.node_coord) < std::abs(x[node] - config.node_coord)) node = i;
  rho.nodes.push_back(node);
  rho.factors.push_back(WeightModel::power(config.beta, std::max(X.diameter(), 1.0)));
  rho.origin = node;
  if (config.beta_inf)
    rho.infinity_factor = WeightModel::power(*config.beta_inf, 1.0, true);
  return rho;
}

namespace {

std::string classify(const std::vector<StudyLevelRow>& rows, double stability_ratio,
                     double blow_up_ratio) {
  const std::size_t n = rows.size();
  bool monotone = true;
  for (std::size_t i = 1; i < n; ++i)
    if (!(rows[i].estimate > rows[i - 1].estimate)) monotone = false;
  const double last_step = rows[n - 1].estimate / rows[n - 2].estimate;
  const double overall = rows[n - 1].estimate / rows[0].estimate;
  if (monotone && overall >= blow_up_ratio && last_step > stability_ratio) return "diverging";
  if (last_step <= stability_ratio) return "stable";
  return "inconclusive";
}

CriterionVerdict joined_criterion(const ExperimentConfig& config, const MetricMeasureSpace& X,
                                  const ExponentField& p) {
  using K = OperatorSpec::Kind;
  switch (config.op.kind) {
    case K::maximal:
    case K::fractional_maximal: {
      const RadialProductWeight rho = build_weight(config, X);
      if (X.truncated_unbounded()) return theoremC_check(rho, p, X);
      return theoremB_check(rho, p, X);
    }
    case K::hardy_lower:
      return hardy_condition_check(config.op.alpha, std::nullopt, p.values(), X);
    case K::hardy_upper:
      return hardy_condition_check(std::nullopt, config.op.beta, p.values(), X);
    case K::riesz_potential:
    case K::curve_potential: {
      const WeightModel unit = WeightModel::power(config.use_weight ? config.beta : 0.0);
      Index node = 0;
      return potential_weight_check(unit, node,
                                    ArrayXd::Constant(X.size(), config.op.alpha), p, X);
    }
    default: {
      CriterionVerdict v;
      v.name = "none";
      v.citation = "no admissibility condition attached to this operator";
      v.satisfied = Status::unknown;
      return v;
    }
  }
}

}  // namespace

StudyReport refinement_study(const ExperimentConfig& config) {
  if (config.levels.size() < 2) throw std::invalid_argument("study needs >= 2 refinement levels");
  if (config.budget < 1) throw std::invalid_argument("candidate budget must be >= 1");
  StudyReport rep;
  rep.config = config;
  for (std::size_t li = 0; li < config.levels.size(); ++li) {
    const int n = config.levels[li];
    const MetricMeasureSpace X = build_level_space(config, n);
    const ExponentField p = build_exponent(config, X);

    ArrayXd rho_values = ArrayXd::Ones(X.size());
    WeightField field{rho_values, {}};
    std::vector<Index> nodes;
    if (config.use_weight || config.beta_inf) {
      const RadialProductWeight rho = build_weight(config, X);
      field = evaluate_weight(rho, X);
      nodes = rho.nodes;
    } else {
      // concentrate candidates where the grid resolves finest and coarsest
      const ArrayXd x = X.coords().col(0).array();
      Index lo = 0, hi = 0;
      for (Index i = 1; i < X.size(); ++i) {
        if (x[i] < x[lo]) lo = i;
        if (x[i] > x[hi]) hi = i;
      }
      nodes = {lo, hi};
    }

    ExponentField q = p;
    if (config.q_from_sobolev) {
      // 1/q = 1/p - alpha/n
      ArrayXd qv = 1.0 / (1.0 / p.values() - config.op.alpha / X.dim_hint());
      q = ExponentField(std::move(qv), p.p_inf() ? std::optional<double>(1.0 / (1.0 / *p.p_inf() - config.op.alpha / X.dim_hint())) : std::nullopt);
    } else if (config.q_const > 0) {
      q = ExponentField::constant(config.q_const, X.size());
    }

    const std::vector<Candidate> corpus =
        candidates(field, p, X, nodes, config.seed, config.budget);
    NormEstimate est = estimate_operator_norm(config.op, corpus, field.values, p, q, X,
                                              config.workers);
    est.level = static_cast<int>(li);
    rep.rows.push_back({n, est.value, est.argmax_tag, est.trials});

    if (li + 1 == config.levels.size()) rep.criterion = joined_criterion(config, X, p);
  }
  rep.verdict = classify(rep.rows, config.stability_ratio, config.blow_up_ratio);
  return rep;
}

StudyReport hardy_experiment(std::optional<double> alpha, std::optional<double> beta,
                             double p_const, const std::vector<int>& levels, std::uint64_t seed,
                             int budget) {
  if (alpha.has_value() == beta.has_value())
    throw std::invalid_argument("supply exactly one of the two orders");
  ExperimentConfig cfg;
  cfg.name = alpha ? "hardy_lower_study" : "hardy_upper_study";
  cfg.space_kind = "halfline";
  cfg.box_hi = 1.0;
  cfg.levels = levels;
  cfg.p_const = p_const;
  cfg.seed = seed;
  cfg.budget = budget;
  if (alpha) {
    cfg.op.kind = OperatorSpec::Kind::hardy_lower;
    cfg.op.alpha = *alpha;
  } else {
    cfg.op.kind = OperatorSpec::Kind::hardy_upper;
    cfg.op.beta = *beta;
  }
  return refinement_study(cfg);
}

StudyReport potential_experiment(double alpha, double p_const, double q_const,
                                 const std::vector<int>& levels, std::uint64_t seed, int budget) {
  ExperimentConfig cfg;
  cfg.name = "potential_study";
  cfg.space_kind = "interval_graded";
  cfg.box_hi = 1.0;
  cfg.levels = levels;
  cfg.p_const = p_const;
  cfg.seed = seed;
  cfg.budget = budget;
  cfg.op.kind = OperatorSpec::Kind::riesz_potential;
  cfg.op.alpha = alpha;
  if (q_const > 0) {
    cfg.q_const = q_const;
  } else {
    cfg.q_from_sobolev = true;
  }
  return refinement_study(cfg);
}

}  // namespace vexlab
