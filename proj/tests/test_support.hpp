#ifndef VEXLAB_TEST_SUPPORT_HPP
#define VEXLAB_TEST_SUPPORT_HPP

#include <random>

#include "vexlab/exponent.hpp"
#include "vexlab/space.hpp"

namespace vexlab::testing {

/// Random planar point cloud with positive (occasionally zero) masses.
inline MetricMeasureSpace random_cloud(std::mt19937_64& rng, Index n, bool with_zero_mass = true) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd coords(n, 2);
  ArrayXd mass(n);
  for (Index i = 0; i < n; ++i) {
    coords(i, 0) = unit(rng);
    coords(i, 1) = unit(rng);
    mass[i] = 0.1 + unit(rng);
  }
  if (with_zero_mass && n > 4) mass[static_cast<Index>(unit(rng) * (n - 1))] = 0.0;
  return MetricMeasureSpace(std::move(coords), std::move(mass), SpaceKind::euclidean_grid, 2.0);
}

inline ArrayXd random_function(std::mt19937_64& rng, Index n, double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  ArrayXd f(n);
  for (Index i = 0; i < n; ++i) f[i] = gauss(rng);
  return f;
}

/// Smooth variable exponent on a 1-D grid, safely inside (1, inf).
inline ExponentField wavy_exponent(const MetricMeasureSpace& X, double base = 2.0,
                                   double amp = 0.5) {
  const ArrayXd x = X.coords().col(0).array();
  ArrayXd v = base + amp * (3.0 * x).sin();
  return ExponentField(std::move(v));
}

}  // namespace vexlab::testing

#endif
