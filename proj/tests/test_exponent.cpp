#include <doctest.h>

#include "test_support.hpp"
#include "vexlab/exponent.hpp"

using namespace vexlab;

TEST_CASE("exponent field validates its range") {
  CHECK_THROWS(ExponentField(ArrayXd::Constant(4, 1.0)));
  CHECK_THROWS(ExponentField(ArrayXd::Constant(4, 0.5)));
  ArrayXd v(3);
  v << 1.5, 2.0, 7.0;
  ExponentField p(v);
  CHECK(p.p_minus() == 1.5);
  CHECK(p.p_plus() == 7.0);
}

TEST_CASE("conjugate: closed forms, involution, order reversal") {
  ExponentField two = ExponentField::constant(2.0, 8);
  CHECK((two.conjugate().values() == 2.0).all());
  ExponentField three = ExponentField::constant(3.0, 8);
  CHECK((three.conjugate().values() == 1.5).all());

  MetricMeasureSpace X = build_grid({{0.0, 1.0}}, {64});
  ExponentField p = testing::wavy_exponent(X);
  const ArrayXd twice = p.conjugate().conjugate().values();
  CHECK((twice - p.values()).abs().maxCoeff() <= 1e-14);

  // 1/p + 1/p' = 1
  CHECK((1.0 / p.values() + 1.0 / p.conjugate().values() - 1.0).abs().maxCoeff() <= 1e-14);

  // p'_- = p^+ / (p^+ - 1)
  CHECK(p.conjugate().p_minus() ==
        doctest::Approx(p.p_plus() / (p.p_plus() - 1.0)).epsilon(1e-14));

  // order reversal on a pointwise-larger exponent
  ExponentField q(p.values() + 0.3);
  CHECK((q.conjugate().values() <= p.conjugate().values() + 1e-15).all());
}

TEST_CASE("log-Holder witness: constants, Lipschitz, and shift invariance") {
  MetricMeasureSpace X = build_grid({{0.0, 0.25}}, {64});
  auto [a0, v0] = log_holder_constant(ExponentField::constant(2.0, X.size()), X);
  CHECK(a0 == 0.0);
  CHECK(v0.satisfied == Status::pass);

  ExponentField p(ArrayXd(2.0 + X.coords().col(0).array()));
  auto [a1, v1] = log_holder_constant(p, X);
  CHECK(a1 > 0.0);
  CHECK(a1 <= 1.0 / M_E + 0.05);  // sup of s ln(1/s) plus mesh slack

  ExponentField shifted(p.values() + 0.5);
  CHECK(log_holder_constant(shifted, X).first == a1);
}

TEST_CASE("log-Holder witness grows under refinement for a jump") {
  auto jumpy = [](const MetricMeasureSpace& X) {
    ArrayXd v(X.size());
    for (Index i = 0; i < X.size(); ++i) v[i] = X.coords()(i, 0) < 0.125 ? 2.0 : 2.5;
    return ExponentField(v);
  };
  MetricMeasureSpace coarse = build_grid({{0.0, 0.25}}, {64});
  MetricMeasureSpace fine = build_grid({{0.0, 0.25}}, {256});
  CriterionVerdict v = log_holder_two_level(jumpy(coarse), coarse, jumpy(fine), fine);
  CHECK(v.satisfied == Status::fail);

  // a smooth exponent stays stable
  CriterionVerdict s = log_holder_two_level(testing::wavy_exponent(coarse), coarse,
                                            testing::wavy_exponent(fine), fine);
  CHECK(s.satisfied == Status::pass);
}

TEST_CASE("log-Holder witness refinement monotonicity (more pairs tested)") {
  MetricMeasureSpace coarse = build_grid({{0.0, 0.25}}, {32});
  MetricMeasureSpace fine = build_grid({{0.0, 0.25}}, {64});
  const double ac = log_holder_constant(testing::wavy_exponent(coarse), coarse).first;
  const double af = log_holder_constant(testing::wavy_exponent(fine), fine).first;
  CHECK(af >= ac - 1e-12);
}

TEST_CASE("decay constant at infinity") {
  MetricMeasureSpace X = build_grid({{0.0, 100.0}}, {512}, {}, 100.0);
  const ArrayXd x = X.coords().col(0).array();

  auto [a0, v0] = decay_constant_at_infinity(ExponentField(ArrayXd::Constant(X.size(), 2.0), 2.0), X);
  CHECK(a0 == 0.0);

  ExponentField slow(ArrayXd(2.0 + 1.0 / (2.0 + x).log()), 2.0);
  auto [a1, v1] = decay_constant_at_infinity(slow, X);
  CHECK(a1 == doctest::Approx(1.0).epsilon(0.05));

  ExponentField fast(ArrayXd(2.0 + 1.0 / (1.0 + x).sqrt()), 2.0);
  auto [a2, v2] = decay_constant_at_infinity(fast, X);
  CHECK(std::isfinite(a2));

  MetricMeasureSpace bounded = build_grid({{0.0, 1.0}}, {32});
  CHECK_THROWS(decay_constant_at_infinity(ExponentField::constant(2.0, 32), bounded));
}

TEST_CASE("half-line exponent class check") {
  MetricMeasureSpace X = build_halfline_grid(10.0, 256, 0.95);
  const ArrayXd x = X.coords().col(0).array();

  CriterionVerdict ok = hardy_class_check(ArrayXd::Constant(X.size(), 2.0), X);
  CHECK(ok.satisfied == Status::pass);
  CHECK(ok.witness("A0") == 0.0);
  CHECK(ok.witness("A_inf") == 0.0);

  // p(x) = 2 + 1/ln(1/x) near zero, constant beyond
  ArrayXd v(X.size());
  for (Index i = 0; i < X.size(); ++i)
    v[i] = x[i] < 0.5 ? 2.0 + 1.0 / std::log(1.0 / x[i]) : 2.0 + 1.0 / std::log(2.0);
  CriterionVerdict decay = hardy_class_check(v, X, 2.0);
  CHECK(decay.satisfied == Status::pass);
  CHECK(decay.witness("A0") <= 1.0 + 0.05);

  ArrayXd dip = ArrayXd::Constant(X.size(), 2.0);
  dip[3] = 0.7;
  CHECK(hardy_class_check(dip, X).satisfied == Status::fail);
}
