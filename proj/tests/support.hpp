#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <cmath>
#include <limits>
#include <initializer_list>
#include <string>
#include <vector>

#include "hartogs/metric.hpp"
#include "hartogs/profile.hpp"
#include "hartogs/types.hpp"

namespace hartogs::testing {

/// The five profiles every property sweep runs over.
inline std::vector<Profile> builtin_profiles() {
  return {Profile::affine(1, 1), Profile::affine(2, 3), Profile::power_cap(2),
          Profile::exp_decay(1), Profile::rational()};
}

inline std::vector<Profile> non_affine_profiles() {
  return {Profile::power_cap(2), Profile::exp_decay(1), Profile::rational()};
}

inline CVector vec(std::initializer_list<Complex> values) {
  CVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& c : values) v(i++) = c;
  return v;
}

/// Central difference of a scalar function with step 1e-5 (1 + |x|),
/// shrunk to 1e-5 (hi - x) near a pole at hi, falling back to a one-sided
/// second-order stencil when x - 2h < lo.
template <typename F>
double fd_derivative(const F& f, double x, double lo = 0.0,
                     double hi = std::numeric_limits<double>::infinity()) {
  const double h = 1e-5 * std::min(1.0 + std::abs(x), hi - x);
  if (x - h < lo) return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// L(x) from its defining expression d/dx [x d/dx log V] with V from the
/// closed-form F, F', F'' and V', V'' by central differences of V.
inline double fd_l_function(const Profile& profile, double x) {
  const auto v = [&](double t) { return profile.b_function(t); };
  const double h = 1e-5 * (1.0 + x);
  double v0 = v(x), v1, v2;
  if (x - h < 0.0) {
    const double a = v(x + h), b = v(x + 2 * h), c = v(x + 3 * h);
    v1 = (-3.0 * v0 + 4.0 * a - b) / (2.0 * h);
    v2 = (2.0 * v0 - 5.0 * a + 4.0 * b - c) / (h * h);
  } else {
    const double a = v(x + h), b = v(x - h);
    v1 = (a - b) / (2.0 * h);
    v2 = (a - 2.0 * v0 + b) / (h * h);
  }
  return v1 / v0 + x * (v2 * v0 - v1 * v1) / (v0 * v0);
}

inline double relative_error(double got, double want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

}  // namespace hartogs::testing
