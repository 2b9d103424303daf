// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sipcert {

/// Finite-dimensional real coordinate vector.
///
/// Construction validates that every coordinate is finite and that the
/// dimension is at least one; all downstream code may rely on both.
class Vector {
public:
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const noexcept { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  /// True when every coordinate is exactly zero.
  bool is_zero() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

private:
  std::vector<double> coords_;
};

Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(double s, const Vector& v);
Vector operator-(const Vector& v);

/// sum_j w[j] * xs[j]; requires matching lengths and a common dimension.
Vector weighted_sum(std::span<const Vector> xs, std::span<const double> w);

/// Throws std::invalid_argument unless u and v share a dimension.
void require_same_dim(const Vector& u, const Vector& v);

/// Space-separated coordinates, shortest round-trip formatting.
std::string to_string(const Vector& v);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

}  // namespace sipcert
