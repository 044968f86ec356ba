#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "vexlab/weight.hpp"

using namespace vexlab;

namespace {

// Independent scaling-limit oracle: value of ln(w(ht)/w(h))/ln(t) at a fixed
// deep h, far deeper than anything the estimator band shares.
double index_oracle(const WeightModel& w, double t, double log_h) {
  return (w.log_value(log_h + std::log(t)) - w.log_value(log_h)) / std::log(t);
}

}  // namespace

TEST_CASE("weight evaluation: closed forms and edges") {
  WeightModel p = WeightModel::power(0.5);
  CHECK(p(0.25) == doctest::Approx(0.5));
  CHECK(p(0.0) == 0.0);
  CHECK(WeightModel::power(-1.0)(0.0) == doctest::Approx(INFINITY));
  WeightModel pl = WeightModel::power_log(0.5, 2.0);
  CHECK(pl(1.0) == doctest::Approx(1.0));  // ln(e/1) = 1
  CHECK_THROWS(WeightModel::power_log(0.5, 2.0, 10.0));  // positivity domain
}

TEST_CASE("radial product weights") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {9});
  RadialProductWeight rho;
  SUBCASE("empty product is 1") {
    WeightField f = evaluate_weight(rho, X);
    CHECK((f.values == 1.0).all());
    CHECK(f.singular_points.empty());
  }
  SUBCASE("single power node") {
    rho.nodes = {0};
    rho.factors = {WeightModel::power(0.5)};
    WeightField f = evaluate_weight(rho, X);
    CHECK(f.values[4] == doctest::Approx(std::sqrt(0.5)));
    CHECK(f.values[0] == 0.0);
    CHECK(f.singular_points == std::vector<Index>{0});
  }
  SUBCASE("two power nodes multiply") {
    rho.nodes = {0, 8};
    rho.factors = {WeightModel::power(1.0), WeightModel::power(2.0)};
    WeightField f = evaluate_weight(rho, X);
    const double d0 = X.dist(0, 4), d8 = X.dist(8, 4);
    CHECK(f.values[4] == doctest::Approx(d0 * d8 * d8));
  }
}

TEST_CASE("closed-form indices of the power family") {
  IndexPair a = mo_indices(WeightModel::power(0.5));
  CHECK(a.m == 0.5);
  CHECK(a.M == 0.5);
  // squared power law: lambda = 2 doubles the index
  IndexPair b = mo_indices(WeightModel::power(0.3).powed(2.0));
  CHECK(b.m == doctest::Approx(0.6));
  IndexPair c = mo_indices(WeightModel::power_log(0.5, 2.0));
  CHECK(c.m == doctest::Approx(0.5));
  CHECK(c.M == doctest::Approx(0.5));
}

TEST_CASE("numeric index estimate agrees with the deep-limit oracle") {
  const WeightModel w = WeightModel::power_log(0.5, 2.0);
  const IndexPair est = mo_indices_numeric(w);
  // oracle at h = 2^-600, t = 2^-30: far deeper than the estimator band
  const double oracle = index_oracle(w, std::pow(2.0, -30), -600 * std::log(2.0));
  CHECK(est.m == doctest::Approx(oracle).epsilon(0.02));
  CHECK(est.M == doctest::Approx(oracle).epsilon(0.02));
  CHECK(est.m <= est.M);
}

TEST_CASE("index shift and scaling identities, numeric route") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pick(-0.6, 0.8);
  for (int trial = 0; trial < 6; ++trial) {
    const double a = pick(rng), b = std::floor(3.0 * (pick(rng) + 0.6));
    const WeightModel w = WeightModel::power_log(a, b);
    const IndexPair base = mo_indices_numeric(w);
    for (double shift : {-0.5, 0.7}) {
      const IndexPair s = mo_indices_numeric(w.shifted(shift));
      CHECK(s.m == doctest::Approx(base.m + shift).epsilon(1e-9));
      CHECK(s.M == doctest::Approx(base.M + shift).epsilon(1e-9));
    }
    for (double lam : {0.5, 2.0, 3.0}) {
      const IndexPair s = mo_indices_numeric(w.powed(lam));
      CHECK(s.m == doctest::Approx(lam * base.m).epsilon(1e-9));
      CHECK(s.M == doctest::Approx(lam * base.M).epsilon(1e-9));
    }
  }
}

TEST_CASE("indices of almost-increasing weights are nonnegative") {
  // w in the base class: positive, almost increasing
  for (double a : {0.0, 0.4, 1.3}) {
    const IndexPair idx = mo_indices_numeric(WeightModel::power(a));
    CHECK(idx.m >= -1e-9);
    CHECK(idx.M >= idx.m - 1e-12);
  }
}

TEST_CASE("at-infinity indices") {
  IndexPair p = mo_indices_at_infinity(WeightModel::power(0.4, 1.0, true));
  CHECK(p.m == 0.4);
  CHECK(p.M == 0.4);
  IndexPair c = mo_indices_at_infinity_numeric(WeightModel::power(0.0, 1.0, true));
  CHECK(c.m == doctest::Approx(0.0).epsilon(1e-9));

  WeightModel osc = WeightModel::custom(
      [](double t) { return std::pow(t, 0.4) * (2.0 + std::sin(std::log(std::log(t + 3.0)))); },
      2.0, true);
  IndexPair o = mo_indices_at_infinity_numeric(osc);
  CHECK(o.m == doctest::Approx(0.4).epsilon(0.05));
  CHECK(o.M == doctest::Approx(0.4).epsilon(0.05));
}

TEST_CASE("almost increasing witness and normalization shift") {
  CHECK(almost_increasing_witness(WeightModel::power(0.5)) == doctest::Approx(1.0));
  const WeightModel dec = WeightModel::power(-0.75);
  CHECK(almost_increasing_witness(dec) > 8.0);
  const double shift = shift_to_almost_increasing(dec);
  CHECK(shift >= 0.75 - 1e-9);
  CHECK(almost_increasing_witness(dec.shifted(shift)) <= 8.0);
  // the numeric index path records the shift it needed
  const IndexPair idx = mo_indices_numeric(dec);
  CHECK(idx.shift >= 0.75 - 1e-9);
}

TEST_CASE("lower integral condition") {
  // t^gamma with gamma > alpha: passes with c_est -> 1/(gamma - alpha)
  CriterionVerdict pass = zygmund_check_lower(WeightModel::power(0.5), 0.2, 1.0);
  CHECK(pass.satisfied == Status::pass);
  CHECK(pass.witness("c_est") == doctest::Approx(1.0 / 0.3).epsilon(1e-6));

  CHECK(zygmund_check_lower(WeightModel::power(0.0), 0.0, 1.0).satisfied == Status::fail);
  CHECK(zygmund_check_lower(WeightModel::power(0.5), 0.5, 1.0).satisfied == Status::fail);
}

TEST_CASE("upper integral condition") {
  CriterionVerdict pass = zygmund_check_upper(WeightModel::power(0.5), 0.8, 1.0);
  CHECK(pass.satisfied == Status::pass);
  CHECK(pass.witness("c_est") == doctest::Approx(1.0 / 0.3).epsilon(1e-3));

  CHECK(zygmund_check_upper(WeightModel::power(0.5), 0.5, 1.0).satisfied == Status::fail);
  CHECK(zygmund_check_upper(WeightModel::power_log(0.5, 1.0), 0.8, 1.0).satisfied == Status::pass);
}

TEST_CASE("phi class: conjunction plus index-interval agreement") {
  CriterionVerdict in = phi_class_check(WeightModel::power(0.5), 0.2, 0.8, 1.0);
  CHECK(in.satisfied == Status::pass);
  CHECK(in.witness("agreement") == 1.0);

  CriterionVerdict above = phi_class_check(WeightModel::power(0.9), 0.2, 0.8, 1.0);
  CHECK(above.satisfied == Status::fail);
  CHECK(above.witness("agreement") == 1.0);

  // endpoint stress: quadrature fails, index test sits on the boundary
  CriterionVerdict edge = phi_class_check(WeightModel::power_log(0.8, 1.0), 0.2, 0.8, 1.0);
  CHECK(edge.satisfied == Status::fail);
  CHECK(edge.witness("agreement") == 0.5);
}

TEST_CASE("psi class: direct and reflected routes agree") {
  CriterionVerdict in = psi_class_check(WeightModel::power(0.5, 1.0, true), 0.2, 0.8, 1.0);
  CHECK(in.satisfied == Status::pass);
  CHECK(in.witness("direct_pass") == in.witness("reflected_pass"));

  CriterionVerdict cst = psi_class_check(WeightModel::power(0.0, 1.0, true), -0.5, 0.5, 1.0);
  CHECK(cst.satisfied == Status::pass);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pick(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double gamma = -0.5 + 1.4 * pick(rng);
    const double b = std::floor(3.0 * pick(rng)) - 1.0;
    const WeightModel w = WeightModel::power_log(gamma, b, 1.0, true);
    const double alpha = gamma - 0.15 - pick(rng);
    const double beta = gamma + 0.15 + pick(rng);
    CriterionVerdict v = psi_class_check(w, alpha, beta, 1.0);
    CHECK(v.satisfied != Status::unknown);  // routes agreed
    CHECK(v.witness("direct_pass") == v.witness("reflected_pass"));
  }
}

TEST_CASE("weight model guards") {
  CHECK_THROWS(WeightModel::sampled(ArrayXd::Ones(1), ArrayXd::Ones(1)));
  ArrayXd t(3), v(3);
  t << 1.0, 2.0, 4.0;
  v << 1.0, -2.0, 4.0;
  CHECK_THROWS(WeightModel::sampled(t, v));
  v << 1.0, 2.0, 4.0;
  const WeightModel s = WeightModel::sampled(t, v);
  CHECK(s(2.0) == doctest::Approx(2.0));
  CHECK(s(2.83) == doctest::Approx(2.83).epsilon(0.01));  // log-log interpolation
}
