// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "sipcert/norm.hpp"
#include "sipcert/vector.hpp"
#include "support.hpp"

using namespace sipcert;

TEST_CASE("Vector validates coordinates") {
  CHECK_THROWS_AS(Vector(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(Vector({1.0, std::numeric_limits<double>::quiet_NaN()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Vector({std::numeric_limits<double>::infinity()}), std::invalid_argument);
  CHECK(Vector({0.0, 0.0}).is_zero());
  CHECK_FALSE(Vector({0.0, 1e-300}).is_zero());
}

TEST_CASE("Vector arithmetic") {
  const Vector u{1.0, 2.0};
  const Vector v{3.0, -1.0};
  CHECK(u + v == Vector{4.0, 1.0});
  CHECK(u - v == Vector{-2.0, 3.0});
  CHECK(2.0 * u == Vector{2.0, 4.0});
  CHECK(-u == Vector{-1.0, -2.0});
  CHECK_THROWS_AS(u + Vector{1.0}, std::invalid_argument);

  const std::vector<Vector> xs = {u, v};
  const std::vector<double> w = {0.5, 0.5};
  CHECK(weighted_sum(xs, w) == Vector{2.0, 0.5});
}

TEST_CASE("norm evaluation on the (3,-4) triple") {
  const Vector v{3.0, -4.0};
  CHECK(NormSpec::lp(1.0)(v) == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(NormSpec::lp(2.0)(v) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(NormSpec::lp_inf()(v) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("weighted norms") {
  const Vector v{3.0, -4.0};
  CHECK(NormSpec::weighted_lp(1.0, {1.0, 2.0})(v) == doctest::Approx(11.0));
  CHECK(NormSpec::weighted_lp_inf({1.0, 2.0})(v) == doctest::Approx(8.0));
  CHECK_THROWS_AS(NormSpec::weighted_lp(2.0, {1.0, 2.0})(Vector{1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(NormSpec::weighted_lp(2.0, {1.0, -1.0}), std::invalid_argument);
  CHECK_THROWS_AS(NormSpec::weighted_lp(2.0, {}), std::invalid_argument);
}

TEST_CASE("invalid exponents rejected") {
  CHECK_THROWS_AS(NormSpec::lp(0.5), std::invalid_argument);
  CHECK_THROWS_AS(NormSpec::lp(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("norm is zero only at zero, and scaling survives extremes") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const NormSpec n = test::lp_norm_pool(static_cast<std::size_t>(i));
    const Vector v = test::random_vector(rng, 1 + i % 16);
    const double nv = n(v);
    CHECK(nv >= 0.0);
    if (v.is_zero()) CHECK(nv == 0.0);
    // absolute homogeneity at 1e-12 relative
    const double alpha = -3.5;
    CHECK(n(alpha * v) == doctest::Approx(std::abs(alpha) * nv).epsilon(1e-12));
  }
  // huge p must not overflow thanks to the max-coordinate rescale
  const Vector big{1e200, 5e199};
  CHECK(std::isfinite(NormSpec::lp(64.0)(big)));
  CHECK(NormSpec::lp(64.0)(big) == doctest::Approx(1e200).epsilon(0.05));
}

TEST_CASE("triangle inequality sampled") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const NormSpec n = test::lp_norm_pool(static_cast<std::size_t>(i));
    const std::size_t dim = 1 + i % 16;
    const Vector u = test::random_vector(rng, dim);
    const Vector v = test::random_vector(rng, dim);
    const double scale = n(u) + n(v);
    CHECK(n(u + v) <= scale + 1e-12 * (1.0 + scale));
  }
}

TEST_CASE("large p approaches the sup norm") {
  std::mt19937_64 rng(13);
  const NormSpec p64 = NormSpec::lp(64.0);
  const NormSpec sup = NormSpec::lp_inf();
  for (int i = 0; i < 200; ++i) {
    const Vector v = test::random_vector(rng, 1 + i % 16);
    if (v.is_zero()) continue;
    CHECK(std::abs(p64(v) - sup(v)) <= 0.1 * sup(v));
  }
}

TEST_CASE("validate_norm accepts real norms") {
  CHECK(validate_norm(NormSpec::lp(2.0), 3, 100).empty());
  CHECK(validate_norm(NormSpec::weighted_lp(1.0, {1.0, 2.0}), 2, 100).empty());
  CHECK(validate_norm(NormSpec::lp_inf(), 5, 100).empty());
}

TEST_CASE("validate_norm flags a signed sum") {
  const auto signed_sum = [](const Vector& v) {
    double s = 0.0;
    for (double c : v.coords()) s += c;
    return s;
  };
  const auto violations = validate_norm(signed_sum, 2, 100);
  REQUIRE_FALSE(violations.empty());
  bool positivity = false;
  for (const auto& v : violations) positivity = positivity || v.axiom == "positivity";
  CHECK(positivity);
}

TEST_CASE("custom norms validated at construction") {
  // a genuine norm: |v|_1/2 + |v|_2
  const auto mixed = [](const Vector& v) {
    double l1 = 0.0, l2 = 0.0;
    for (double c : v.coords()) {
      l1 += std::abs(c);
      l2 += c * c;
    }
    return 0.5 * l1 + std::sqrt(l2);
  };
  CHECK_NOTHROW(NormSpec::custom(mixed, 4));

  const auto broken = [](const Vector& v) { return v[0]; };
  CHECK_THROWS_AS(NormSpec::custom(broken, 2), std::invalid_argument);
}
