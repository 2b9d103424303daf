// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "sipcert/norm.hpp"
#include "sipcert/vector.hpp"

namespace sipcert::test {

inline std::vector<double> random_coords(std::mt19937_64& rng, std::size_t dim,
                                         double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> c(dim);
  for (double& x : c) x = dist(rng);
  return c;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t dim) {
  return Vector(random_coords(rng, dim));
}

// Coordinates bounded away from zero, so the sampled point is clearly
// nonzero under every norm.
inline Vector random_nonzero_vector(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> mag(0.1, 1.0);
  std::uniform_int_distribution<int> flip(0, 1);
  std::vector<double> c(dim);
  for (double& x : c) x = (flip(rng) ? 1.0 : -1.0) * mag(rng);
  return Vector(std::move(c));
}

// The five lp norms the randomized suites cycle through.
inline NormSpec lp_norm_pool(std::size_t i) {
  switch (i % 5) {
    case 0: return NormSpec::lp(1.0);
    case 1: return NormSpec::lp(1.5);
    case 2: return NormSpec::lp(2.0);
    case 3: return NormSpec::lp(3.0);
    default: return NormSpec::lp_inf();
  }
}

// Independent of the closed forms and of the enclosure loop: the raw
// one-sided quotient of the norm itself.
inline double oracle_norm_quotient(const Vector& x, const Vector& y, const NormSpec& n,
                                   double t) {
  return (n(y + t * x) - n(y)) / t;
}

// Direct, unfactored difference quotient of |y+tx|^2 / 2.
inline double oracle_squared_quotient(const Vector& x, const Vector& y,
                                      const NormSpec& n, double t) {
  const double a = n(y + t * x);
  const double b = n(y);
  return (a * a - b * b) / (2.0 * t);
}

inline double dot(const Vector& u, const Vector& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace sipcert::test
