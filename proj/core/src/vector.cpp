// SPDX-License-Identifier: Apache-2.0
#include "sipcert/vector.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace sipcert {

namespace {

void validate_coords(const std::vector<double>& coords) {
  if (coords.empty()) {
    throw std::invalid_argument("Vector: dimension must be at least 1");
  }
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument("Vector: coordinates must be finite");
    }
  }
}

}  // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  validate_coords(coords_);
}

Vector::Vector(std::initializer_list<double> coords) : coords_(coords) {
  validate_coords(coords_);
}

bool Vector::is_zero() const noexcept {
  for (double c : coords_) {
    if (c != 0.0) return false;
  }
  return true;
}

Vector operator+(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  std::vector<double> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] + v[i];
  return Vector(std::move(out));
}

Vector operator-(const Vector& u, const Vector& v) {
  require_same_dim(u, v);
  std::vector<double> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u[i] - v[i];
  return Vector(std::move(out));
}

Vector operator*(double s, const Vector& v) {
  std::vector<double> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s * v[i];
  return Vector(std::move(out));
}

Vector operator-(const Vector& v) { return -1.0 * v; }

Vector weighted_sum(std::span<const Vector> xs, std::span<const double> w) {
  if (xs.empty() || xs.size() != w.size()) {
    throw std::invalid_argument("weighted_sum: vector and weight counts must match and be nonzero");
  }
  std::vector<double> out(xs.front().dim(), 0.0);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (xs[j].dim() != out.size()) {
      throw std::invalid_argument("weighted_sum: dimension mismatch");
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += w[j] * xs[j][i];
  }
  return Vector(std::move(out));
}

void require_same_dim(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
}

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string to_string(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i > 0) out += ' ';
    out += format_double(v[i]);
  }
  return out;
}

}  // namespace sipcert
