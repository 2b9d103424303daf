// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sipcert/vector.hpp"

namespace sipcert {

/// Exponent of an lp norm. Infinity is a distinct case rather than a
/// sentinel float so evaluation never feeds it to pow.
class LpExponent {
public:
  LpExponent() = default;  // p = 2

  static LpExponent finite(double p);
  static LpExponent infinite() noexcept;

  bool is_infinite() const noexcept { return infinite_; }

  /// Finite exponents only.
  double value() const;

private:
  double p_ = 2.0;
  bool infinite_ = false;
};

enum class NormKind { lp, weighted_lp, custom };

/// Description of a norm on finite-dimensional real vectors: the lp
/// family, a coordinate-weighted lp family, or a user-supplied evaluator.
///
/// Custom evaluators are accepted only after sampled checks of absolute
/// homogeneity, the triangle inequality, and positivity; everything built
/// on top assumes the norm axioms hold.
class NormSpec {
public:
  NormSpec() = default;  // Euclidean

  static NormSpec lp(double p);
  static NormSpec lp_inf();
  static NormSpec weighted_lp(double p, std::vector<double> weights);
  static NormSpec weighted_lp_inf(std::vector<double> weights);

  /// Validates `eval` on random samples of dimension `sample_dim` before
  /// accepting it; throws std::invalid_argument listing the violated
  /// axioms otherwise.
  static NormSpec custom(std::function<double(const Vector&)> eval,
                         std::size_t sample_dim, int trials = 256);

  /// Evaluates the norm. Throws on dimension mismatch with the weight
  /// vector and on non-finite custom evaluations.
  double operator()(const Vector& v) const;

  NormKind kind() const noexcept { return kind_; }
  LpExponent exponent() const;                    // lp kinds only
  std::span<const double> weights() const noexcept { return weights_; }
  std::optional<std::size_t> required_dim() const noexcept;

  /// Canonical text form: "lp:2", "lp:inf", "wlp:1.5:1,2", "custom".
  std::string description() const;

private:
  NormKind kind_ = NormKind::lp;
  LpExponent p_;
  std::vector<double> weights_;
  std::function<double(const Vector&)> eval_;
};

struct NormAxiomViolation {
  std::string axiom;  // "homogeneity" | "triangle" | "positivity" | "zero"
  Vector witness_u;
  std::optional<Vector> witness_v;
  double scalar = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
};

inline constexpr std::uint64_t kNormValidationSeed = 0x51dc27f3a9ULL;

/// Samples `trials` random configurations of dimension `sample_dim` and
/// reports every observed violation of the norm axioms. Empty result
/// means no violation was found within tolerance.
std::vector<NormAxiomViolation> validate_norm(
    const std::function<double(const Vector&)>& eval, std::size_t sample_dim,
    int trials, std::uint64_t seed = kNormValidationSeed);

std::vector<NormAxiomViolation> validate_norm(
    const NormSpec& n, std::size_t sample_dim, int trials,
    std::uint64_t seed = kNormValidationSeed);

}  // namespace sipcert
