#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

#include "vexlab/criteria.hpp"
#include "vexlab/harness.hpp"
#include "vexlab/io.hpp"
#include "vexlab/lebesgue.hpp"
#include "vexlab/operators.hpp"

namespace fs = std::filesystem;
using namespace vexlab;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string now_string() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", std::gmtime(&t));
  return buf;
}

int status_exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    default: return 2;
  }
}

WeightModel weight_from_config(const Config& cfg, const std::string& section) {
  const std::string tag = config_get(cfg, section, "tag", "power");
  const double ell = std::stod(config_get(cfg, section, "ell", "1"));
  const bool at_inf = config_get(cfg, section, "at_infinity", "0") == "1";
  if (tag == "power")
    return WeightModel::power(std::stod(config_get(cfg, section, "a", "0")), ell, at_inf);
  if (tag == "power_log")
    return WeightModel::power_log(std::stod(config_get(cfg, section, "a", "0")),
                                  std::stod(config_get(cfg, section, "b", "0")), ell, at_inf);
  throw std::invalid_argument("unknown weight tag: " + tag);
}

struct CheckContext {
  MetricMeasureSpace X;
  ExponentField p;
  ExperimentConfig e;
  Config cfg;
};

CheckContext check_context(const Config& cfg) {
  ExperimentConfig e = experiment_from_config(cfg);
  const int n = e.levels.empty() ? 256 : e.levels.back();
  MetricMeasureSpace X = build_level_space(e, n);
  ExponentField p = build_exponent(e, X);
  return {std::move(X), std::move(p), std::move(e), cfg};
}

CriterionVerdict run_criterion(const std::string& name, const Config& cfg) {
  CheckContext ctx = check_context(cfg);
  const auto& e = ctx.e;
  if (name == "theoremA") {
    const WeightField rho = evaluate_weight(build_weight(e, ctx.X), ctx.X);
    return theoremA_check(rho.values, ctx.p, ctx.X);
  }
  if (name == "theoremB") return theoremB_check(build_weight(e, ctx.X), ctx.p, ctx.X);
  if (name == "theoremC") return theoremC_check(build_weight(e, ctx.X), ctx.p, ctx.X);
  if (name == "euclid_maximal") return euclid_maximal_check(build_weight(e, ctx.X), ctx.p, ctx.X);
  if (name == "muckenhoupt") {
    const WeightField rho = evaluate_weight(build_weight(e, ctx.X), ctx.X);
    return muckenhoupt_classical(rho.values, e.p_const, ctx.X, default_radius_grid(ctx.X));
  }
  if (name == "muckenhoupt_variable") {
    const WeightField rho = evaluate_weight(build_weight(e, ctx.X), ctx.X);
    return muckenhoupt_variable(rho.values, ctx.p, ctx.X, default_radius_grid(ctx.X));
  }
  if (name == "hardy") {
    std::optional<double> a, b;
    const std::string sa = config_get(cfg, "hardy", "alpha", "");
    const std::string sb = config_get(cfg, "hardy", "beta", "");
    if (!sa.empty()) a = std::stod(sa);
    if (!sb.empty()) b = std::stod(sb);
    return hardy_condition_check(a, b, ctx.p.values(), ctx.X);
  }
  if (name == "phi_class" || name == "psi_class" || name == "zygmund_lower" ||
      name == "zygmund_upper") {
    const WeightModel w = weight_from_config(cfg, "weight_model");
    const double alpha = std::stod(config_get(cfg, "class", "alpha", "0"));
    const double beta = std::stod(config_get(cfg, "class", "beta", "1"));
    const double ell = std::stod(config_get(cfg, "class", "ell", "1"));
    if (name == "phi_class") return phi_class_check(w, alpha, beta, ell);
    if (name == "psi_class") return psi_class_check(w, alpha, beta, ell);
    if (name == "zygmund_lower") return zygmund_check_lower(w, alpha, ell);
    return zygmund_check_upper(w, beta, ell);
  }
  if (name == "stein_weiss") {
    return stein_weiss_check(std::stod(config_get(cfg, "potential", "gamma0", "0")),
                             std::stod(config_get(cfg, "potential", "gamma_inf", "0")),
                             std::stod(config_get(cfg, "potential", "alpha", "0.25")), ctx.p,
                             ctx.X);
  }
  if (name == "potential_weight") {
    const WeightModel w = weight_from_config(cfg, "weight_model");
    const double alpha = std::stod(config_get(cfg, "potential", "alpha", "0.25"));
    return potential_weight_check(w, 0, ArrayXd::Constant(ctx.X.size(), alpha), ctx.p, ctx.X);
  }
  if (name == "singular_power") {
    std::vector<double> betas{e.beta};
    const RadialProductWeight rho = build_weight(e, ctx.X);
    return singular_power_weight_check(betas, rho.nodes, e.beta_inf, ctx.p, ctx.X);
  }
  if (name == "carleson_power") {
    const int nv = std::stoi(config_get(cfg, "curve", "vertices", "256"));
    const CurveSpace curve = build_circle(nv);
    std::vector<double> betas{e.beta};
    const ExponentField pc = ExponentField::constant(e.p_const, curve.size());
    return carleson_power_weight_check(betas, {0}, e.beta_inf, pc, curve);
  }
  if (name == "carleson_curve") {
    const int nv = std::stoi(config_get(cfg, "curve", "vertices", "256"));
    const CurveSpace curve = build_circle(nv);
    const MetricMeasureSpace Xc = as_metric_space(curve);
    return carleson_check(curve, default_radius_grid(Xc));
  }
  throw CLI::ValidationError("criterion", "unknown criterion: " + name);
}

const char* kCriteria =
    "theoremA theoremB theoremC euclid_maximal muckenhoupt muckenhoupt_variable hardy "
    "phi_class psi_class zygmund_lower zygmund_upper stein_weiss potential_weight "
    "singular_power carleson_power carleson_curve";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"variable-exponent space toolkit"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global flags may follow the subcommand

  std::string config_path, out_dir = ".", format = "csv";
  std::uint64_t seed = 1;
  int workers = 1;
  app.add_option("--config", config_path, "experiment/check config file");
  app.add_option("--seed", seed, "rng seed");
  app.add_option("--workers", workers, "worker threads (1 = bit-stable)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--format", format, "csv or txt")->check(CLI::IsMember({"csv", "txt"}));

  // --- space ---
  auto* sp = app.add_subcommand("space", "build and serialize a discretized space");
  std::string sp_kind = "interval";
  int sp_n = 64, sp_circle = 0;
  bool sp_describe = false;
  sp->add_option("--kind", sp_kind, "interval | grid2d | halfline | graded | curve");
  sp->add_option("--n", sp_n, "points per axis");
  sp->add_option("--circle", sp_circle, "circle polyline with this many vertices");
  sp->add_flag("--describe", sp_describe, "print doubling constant and dimension estimates");

  // --- norm ---
  auto* nm = app.add_subcommand("norm", "Luxemburg norm of a sampled function");
  std::string nm_space, nm_function;
  double nm_p = 2.0, nm_beta = 0.0;
  nm->add_option("--space", nm_space)->required();
  nm->add_option("--function", nm_function)->required();
  nm->add_option("--p", nm_p, "constant exponent");
  nm->add_option("--weight-beta", nm_beta, "power weight d(x, x_1)^beta at the first point");

  // --- indices ---
  auto* ix = app.add_subcommand("indices", "weight scaling indices and class checks");
  std::string ix_tag = "power";
  double ix_a = 0, ix_b = 0, ix_ell = 1, ix_alpha = 0, ix_beta = 1;
  bool ix_at_inf = false;
  ix->add_option("--tag", ix_tag, "power | power_log");
  ix->add_option("--a", ix_a);
  ix->add_option("--b", ix_b);
  ix->add_option("--ell", ix_ell);
  ix->add_option("--alpha", ix_alpha, "lower class endpoint");
  ix->add_option("--beta", ix_beta, "upper class endpoint");
  ix->add_flag("--at-infinity", ix_at_inf);

  // --- check ---
  auto* ck = app.add_subcommand("check", "evaluate an admissibility condition");
  std::string ck_name;
  ck->add_option("--criterion", ck_name)->required();

  // --- apply ---
  auto* ap = app.add_subcommand("apply", "apply an operator to a function file");
  std::string ap_space, ap_function, ap_op = "maximal", ap_out = "out.csv";
  ap->add_option("--space", ap_space)->required();
  ap->add_option("--function", ap_function)->required();
  ap->add_option("--operator", ap_op, "operator spec, e.g. 'riesz_potential 0.25'");
  ap->add_option("--output", ap_out);

  // --- experiment ---
  auto* ex = app.add_subcommand("experiment", "refinement study from a config file");

  CLI11_PARSE(app, argc, argv);

  try {
    fs::create_directories(out_dir);
    if (*sp) {
      if (sp_kind == "curve" || sp_circle > 0) {
        const CurveSpace curve = build_circle(sp_circle > 0 ? sp_circle : sp_n);
        const std::string path = out_dir + "/curve.csv";
        write_curve(curve, path);
        const MetricMeasureSpace Xc = as_metric_space(curve);
        std::cout << "curve: " << curve.size() << " vertices, arc length "
                  << curve.total_arc_length() << "\n";
        std::cout << format_verdict_table({carleson_check(curve, default_radius_grid(Xc))});
        std::cout << "wrote " << path << "\n";
        return 0;
      }
      MetricMeasureSpace X = [&] {
        if (sp_kind == "interval") return build_grid({{0.0, 1.0}}, {sp_n});
        if (sp_kind == "grid2d") return build_grid({{0.0, 1.0}, {0.0, 1.0}}, {sp_n, sp_n});
        if (sp_kind == "halfline") return build_halfline_grid(1.0, sp_n);
        if (sp_kind == "graded") return build_graded_interval(1.0, sp_n);
        throw CLI::ValidationError("kind", "unknown space kind: " + sp_kind);
      }();
      const std::string path = out_dir + "/space.csv";
      write_space(X, path);
      std::cout << "space: " << X.size() << " points, total mass " << X.total_mass() << "\n";
      if (sp_describe) {
        const ArrayXd radii = default_radius_grid(X);
        std::cout << "doubling_constant = " << doubling_constant(X, radii) << "\n";
        const DimensionReport rep = dimension_report(X, radii);
        std::cout << "m_local in [" << rep.m_local.minCoeff() << ", " << rep.m_local.maxCoeff()
                  << "]\n";
        std::cout << "M_local in [" << rep.M_local.minCoeff() << ", " << rep.M_local.maxCoeff()
                  << "]\n";
        std::cout << "m_uniform = " << rep.m_uniform << "\n";
        if (rep.m_inf)
          std::cout << "at infinity: m = " << *rep.m_inf << ", M = " << *rep.M_inf << "\n";
      }
      std::cout << "wrote " << path << "\n";
      return 0;
    }
    if (*nm) {
      const MetricMeasureSpace X = read_space(nm_space);
      const ArrayXd f = read_function(nm_function, X.size());
      const ExponentField p = ExponentField::constant(nm_p, X.size());
      NormResult r;
      if (nm_beta != 0) {
        RadialProductWeight rho;
        rho.nodes = {0};
        rho.factors = {WeightModel::power(nm_beta, std::max(1.0, X.diameter()))};
        r = weighted_norm(f, evaluate_weight(rho, X).values, p, X);
      } else {
        r = luxemburg_norm(f, p, X);
      }
      std::cout << "value = " << r.value << "\nresidual = " << r.residual
                << "\niterations = " << r.iterations << "\nbracket = [" << r.bracket.first
                << ", " << r.bracket.second << "]\n";
      return 0;
    }
    if (*ix) {
      if (ix_ell <= 0) throw CLI::ValidationError("ell", "domain end must be positive");
      const WeightModel w = ix_tag == "power"
                                ? WeightModel::power(ix_a, ix_ell, ix_at_inf)
                                : WeightModel::power_log(ix_a, ix_b, ix_ell, ix_at_inf);
      const IndexPair idx = ix_at_inf ? mo_indices_at_infinity(w) : mo_indices(w);
      std::cout << "m = " << idx.m << "\nM = " << idx.M << "\nshift = " << idx.shift << "\n";
      std::vector<CriterionVerdict> vs;
      if (ix_at_inf)
        vs.push_back(psi_class_check(w, ix_alpha, ix_beta, ix_ell));
      else
        vs.push_back(phi_class_check(w, ix_alpha, ix_beta, ix_ell));
      std::cout << format_verdict_table(vs);
      return 0;
    }
    if (*ck) {
      Config cfg;
      if (!config_path.empty()) cfg = read_config_file(config_path);
      CriterionVerdict v;
      try {
        v = run_criterion(ck_name, cfg);
      } catch (const CLI::ValidationError&) {
        std::cerr << "unknown criterion '" << ck_name << "'; available: " << kCriteria << "\n";
        return 64;
      }
      std::cout << format_verdict_table({v});
      return status_exit_code(v.satisfied);
    }
    if (*ap) {
      const MetricMeasureSpace X = read_space(ap_space);
      const ArrayXd f = read_function(ap_function, X.size());
      const OperatorSpec spec = OperatorSpec::parse(ap_op);
      const ArrayXd g = apply(spec, f, X);
      write_function(g, out_dir + "/" + ap_out);
      std::cout << "wrote " << out_dir << "/" << ap_out << "\n";
      return 0;
    }
    if (*ex) {
      if (config_path.empty()) throw CLI::ValidationError("config", "experiment needs --config");
      Config cfg = read_config_file(config_path);
      ExperimentConfig e = experiment_from_config(cfg);
      if (app.count("--seed")) e.seed = seed;
      if (app.count("--workers")) e.workers = workers;
      RunManifest man;
      man.command = "experiment";
      man.seed = e.seed;
      man.tool_version = kVersion;
      man.started = now_string();
      const StudyReport rep = refinement_study(e);
      man.finished = now_string();
      man.config_echo = e.echo();
      man.config_digest = config_digest(man.config_echo);
      const std::string base = out_dir + "/" + e.name;
      if (format == "csv")
        write_study_csv(rep, base + ".csv");
      else
        write_study_txt(rep, base + ".txt");
      write_study_txt(rep, base + "_report.txt");
      write_study_plot(rep, base + ".plot");
      man.outputs = {base + "." + format, base + "_report.txt", base + ".plot"};
      write_manifest(man, base + ".manifest");
      std::cout << "verdict: " << rep.verdict << "\n";
      for (const auto& row : rep.rows)
        std::cout << "  n=" << row.n << " estimate=" << row.estimate << "\n";
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
