#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "vexlab/space.hpp"

using namespace vexlab;

TEST_CASE("interval grid carries trapezoid cell masses") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {5});
  CHECK(X.mass()[0] == doctest::Approx(0.125));
  CHECK(X.mass()[1] == doctest::Approx(0.25));
  CHECK(X.mass()[4] == doctest::Approx(0.125));
  CHECK(X.total_mass() == doctest::Approx(1.0));
  CHECK(X.kind() == SpaceKind::interval_grid);
}

TEST_CASE("2-D grid total mass is the box volume") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}, {0.0, 1.0}}, {3, 3});
  CHECK(X.total_mass() == doctest::Approx(1.0));
  CHECK(X.dim_hint() == 2.0);
}

TEST_CASE("density integrates against cell masses") {
  MetricMeasureSpace X =
      build_grid({{0.0, 1.0}}, {64}, [](const Eigen::VectorXd& x) { return 2.0 * x[0]; });
  CHECK(X.total_mass() == doctest::Approx(1.0).epsilon(1e-3));  // int_0^1 2x dx
}

TEST_CASE("grid construction rejects bad input") {
  CHECK_THROWS(build_grid({{0.0, 0.0}}, {8}));
  CHECK_THROWS(build_grid({{0.0, 1.0}}, {1}));
  CHECK_THROWS(build_grid({{0.0, 1.0}}, {8}, [](const Eigen::VectorXd&) { return -1.0; }));
}

TEST_CASE("curve: regular polygon approaches circle length") {
  CurveSpace c = build_circle(256);
  CHECK(c.total_arc_length() == doctest::Approx(2.0 * M_PI).epsilon(1e-3));
}

TEST_CASE("curve: open polyline mass and degenerate input") {
  Eigen::ArrayXcd v(3);
  v << std::complex<double>(0, 0), std::complex<double>(1, 0), std::complex<double>(1, 1);
  CurveSpace c = build_curve(v, false);
  CHECK(c.total_arc_length() == doctest::Approx(2.0));

  Eigen::ArrayXcd bad(3);
  bad << std::complex<double>(0, 0), std::complex<double>(0, 0), std::complex<double>(1, 1);
  CHECK_THROWS(build_curve(bad, false));
}

TEST_CASE("balls are open and contain their center") {
  Eigen::MatrixXd coords(3, 1);
  coords << 0.0, 1.0, 2.0;
  MetricMeasureSpace X(coords, ArrayXd::Ones(3), SpaceKind::interval_grid, 1.0);

  CHECK(ball_members(X, 0, 1.5) == std::vector<Index>{0, 1});
  CHECK(ball_members(X, 0, 1.0) == std::vector<Index>{0});  // strict inequality
  CHECK(ball_members(X, 0, 10.0).size() == 3);
  CHECK(ball_measure(X, 1, 0.5) == 1.0);
}

TEST_CASE("ball measure is monotone and members nest") {
  std::mt19937_64 rng(7);
  MetricMeasureSpace X = testing::random_cloud(rng, 40);
  for (double r1 : {0.1, 0.3, 0.5}) {
    const double r2 = r1 + 0.2;
    for (Index c = 0; c < X.size(); c += 7) {
      CHECK(ball_measure(X, c, r1) <= ball_measure(X, c, r2));
      auto m1 = ball_members(X, c, r1);
      auto m2 = ball_members(X, c, r2);
      for (Index id : m1) CHECK(std::find(m2.begin(), m2.end(), id) != m2.end());
    }
  }
}

TEST_CASE("doubling constant: single atom and uniform grids") {
  Eigen::MatrixXd one(1, 1);
  one << 0.0;
  MetricMeasureSpace atom(one, ArrayXd::Ones(1), SpaceKind::interval_grid, 1.0);
  ArrayXd radii(3);
  radii << 0.1, 0.5, 1.0;
  CHECK(doubling_constant(atom, radii) == 1.0);

  MetricMeasureSpace line = build_grid({{0.0, 1.0}}, {64});
  const double d1 = doubling_constant(line, midpoint_radius_grid(line));
  CHECK(d1 >= 1.0);
  CHECK(d1 <= 4.0);

  MetricMeasureSpace plane = build_grid({{0.0, 1.0}, {0.0, 1.0}}, {12, 12});
  const double d2 = doubling_constant(plane, midpoint_radius_grid(plane));
  CHECK(d2 >= 1.0);
  CHECK(d2 <= 8.0);
}

TEST_CASE("doubling constant shrinks toward 2^dim under refinement") {
  MetricMeasureSpace coarse = build_grid({{0.0, 1.0}}, {32});
  MetricMeasureSpace fine = build_grid({{0.0, 1.0}}, {128});
  const double dc = doubling_constant(coarse, midpoint_radius_grid(coarse));
  const double df = doubling_constant(fine, midpoint_radius_grid(fine));
  CHECK(df <= dc + 1e-12);
}

TEST_CASE("doubling is invariant under mass scaling") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {48});
  MetricMeasureSpace Y(X.coords(), X.mass() * 7.5, X.kind(), X.dim_hint());
  const ArrayXd radii = midpoint_radius_grid(X);
  CHECK(doubling_constant(X, radii) == doctest::Approx(doubling_constant(Y, radii)));
  CHECK(uniform_lower_dimension(X, default_radius_grid(X)) ==
        doctest::Approx(uniform_lower_dimension(Y, default_radius_grid(Y))));
}

TEST_CASE("doubling with empty radius grid or no informative radius") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {8});
  CHECK_THROWS(doubling_constant(X, ArrayXd()));
  Eigen::MatrixXd coords(2, 1);
  coords << 0.0, 1.0;
  ArrayXd mass(2);
  mass << 0.0, 1.0;  // center at point 0 has empty balls below r=1
  MetricMeasureSpace Y(coords, mass, SpaceKind::interval_grid, 1.0);
  ArrayXd tiny(1);
  tiny << 1e-6;
  CHECK(doubling_constant(Y, tiny) == 1.0);  // the massive point still counts
}

TEST_CASE("local dimensions: 1-D interior, isolated atom") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {512});
  const LocalDims d = local_dimensions(X, 256, default_radius_grid(X));
  CHECK(d.lower >= 0.85);
  CHECK(d.upper <= 1.15);
  CHECK(d.lower <= d.upper);
  CHECK(d.fitted == doctest::Approx(1.0).epsilon(0.2));

  // atom far from a small cluster: constant ball content over the probe band
  Eigen::MatrixXd coords(4, 1);
  coords << 0.0, 100.0, 100.5, 101.0;
  MetricMeasureSpace Y(coords, ArrayXd::Ones(4), SpaceKind::interval_grid, 1.0);
  ArrayXd radii(5);
  radii << 1.0, 2.0, 4.0, 8.0, 120.0;
  const LocalDims a = local_dimensions(Y, 0, radii);
  CHECK(a.lower == 0.0);
  CHECK(a.upper == 0.0);
}

TEST_CASE("local dimension preconditions") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {64});
  ArrayXd narrow(3);
  narrow << 0.1, 0.15, 0.2;  // spans less than two decades
  CHECK_THROWS(local_dimensions(X, 32, narrow));
  CHECK_THROWS(local_dimensions(X, 32, ArrayXd()));
}

TEST_CASE("uniform lower dimension: grids and atom") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {256});
  const double m = uniform_lower_dimension(X, default_radius_grid(X));
  CHECK(m >= 0.8);
  CHECK(m <= 1.2);

  Eigen::MatrixXd one(1, 1);
  one << 0.0;
  MetricMeasureSpace atom(one, ArrayXd::Ones(1), SpaceKind::interval_grid, 1.0);
  ArrayXd radii(4);
  radii << 0.1, 1.0, 10.0, 100.0;
  CHECK(uniform_lower_dimension(atom, radii) == 0.0);
}

TEST_CASE("uniform lower dimension sits below local dimensions") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {256});
  const ArrayXd radii = default_radius_grid(X);
  const double m_uni = uniform_lower_dimension(X, radii);
  for (Index i : {Index(0), Index(64), Index(128), Index(255)}) {
    const LocalDims d = local_dimensions(X, i, radii);
    CHECK(m_uni <= d.lower + 0.15);
  }
}

TEST_CASE("growth bound: fitted exponent lies inside the local index band") {
  MetricMeasureSpace X = build_grid({{0.0, 1.0}, {0.0, 1.0}}, {32, 32});
  const LocalDims d = local_dimensions(X, 32 * 16 + 16, default_radius_grid(X));
  CHECK(d.fitted >= d.lower - 0.2);
  CHECK(d.fitted <= d.upper + 0.2);
}

TEST_CASE("dimensions at infinity need a truncated space") {
  MetricMeasureSpace bounded = build_grid({{0.0, 1.0}}, {64});
  CHECK_THROWS(dimensions_at_infinity(bounded, default_radius_grid(bounded)));

  MetricMeasureSpace X = build_grid({{0.0, 100.0}}, {512}, {}, 100.0);
  auto [mi, Mi] = dimensions_at_infinity(X, default_radius_grid(X));
  CHECK(mi == doctest::Approx(1.0).epsilon(0.2));
  CHECK(Mi == doctest::Approx(1.0).epsilon(0.2));
  CHECK(mi <= Mi + 1e-12);
}

TEST_CASE("dimension report bundles the estimates") {
  MetricMeasureSpace X = build_grid({{0.0, 100.0}}, {256}, {}, 100.0);
  const DimensionReport rep = dimension_report(X, default_radius_grid(X));
  CHECK(rep.m_inf.has_value());
  CHECK(rep.m_local.size() == static_cast<Index>(rep.probe_points.size()));
  for (Index k = 0; k < rep.m_local.size(); ++k) {
    CHECK(rep.m_local[k] >= 0.0);
    CHECK(rep.m_local[k] <= rep.M_local[k] + 1e-12);
  }
}

TEST_CASE("carleson check: circle, segment, shrinking spiral") {
  CurveSpace circle = build_circle(256);
  const MetricMeasureSpace Xc = as_metric_space(circle);
  CriterionVerdict v = carleson_check(circle, default_radius_grid(Xc));
  CHECK(v.satisfied == Status::pass);
  CHECK(v.witness("C_est") <= 4.0);

  Eigen::ArrayXcd seg(9);
  for (int i = 0; i < 9; ++i) seg[i] = std::complex<double>(i / 8.0, 0.0);
  CurveSpace line = build_curve(seg, false);
  CriterionVerdict vs = carleson_check(line, default_radius_grid(as_metric_space(line)));
  CHECK(vs.witness("C_est") <= 2.5);

  // logarithmic spiral with rapidly shrinking turns: no pass asserted
  const int n = 600;
  Eigen::ArrayXcd sp(n);
  for (int i = 0; i < n; ++i) {
    const double th = 0.12 * i;
    const double r = std::exp(-0.22 * th);
    sp[i] = std::polar(r, th);
  }
  CurveSpace spiral = build_curve(sp, false);
  CriterionVerdict vsp = carleson_check(spiral, default_radius_grid(as_metric_space(spiral)));
  CHECK(vsp.witness("C_est") > 0.0);  // witness reported whatever the verdict
}

TEST_CASE("quasimetric table validation") {
  Eigen::MatrixXd d(3, 3);
  d << 0, 1, 5, 1, 0, 1, 5, 1, 0;  // 5 > 1+1 violates the triangle inequality
  CHECK_THROWS(MetricMeasureSpace::from_distance_table(d, ArrayXd::Ones(3), 1.0, 1.0));
  // admissible as a quasimetric with kappa = 2.5
  auto X = MetricMeasureSpace::from_distance_table(d, ArrayXd::Ones(3), 2.5, 1.0);
  CHECK(X.quasi_const() == 2.5);
  CHECK(X.dist(0, 2) == 5.0);
}

TEST_CASE("graded grids expose the requested range") {
  MetricMeasureSpace X = build_halfline_grid(1.0, 128, 0.9);
  CHECK(X.truncated_unbounded());
  CHECK(X.coords()(0, 0) > 0.0);
  CHECK(X.coords()(127, 0) == doctest::Approx(1.0));
  CHECK(X.total_mass() == doctest::Approx(1.0).epsilon(0.01));

  MetricMeasureSpace Y = build_graded_interval(1.0, 128, 0.9);
  CHECK(!Y.truncated_unbounded());
  CHECK(Y.coords()(0, 0) == 0.0);
}
