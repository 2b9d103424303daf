// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sipcert/norm.hpp"
#include "sipcert/semi_inner.hpp"
#include "sipcert/vector.hpp"

namespace sipcert {

/// Convex weights p_j >= 0, normalized to sum 1 at construction.
class WeightVector {
public:
  explicit WeightVector(std::vector<double> raw);
  static WeightVector uniform(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t j) const noexcept { return weights_[j]; }
  std::span<const double> values() const noexcept { return weights_; }

  /// True when the raw sum differed from 1 by more than 1e-9 before
  /// normalization; callers may want to warn.
  bool renormalized() const noexcept { return renormalized_; }

private:
  std::vector<double> weights_;
  bool renormalized_ = false;
};

struct PreconditionIssue {
  std::optional<std::size_t> index;  // vector index for per-j conditions
  std::string condition;
};

/// Thrown by operations whose contract makes a precondition failure an
/// error rather than a reported state; carries per-index details.
class precondition_error : public std::invalid_argument {
public:
  precondition_error(const std::string& what, std::vector<PreconditionIssue> issues)
      : std::invalid_argument(what), issues_(std::move(issues)) {}

  const std::vector<PreconditionIssue>& issues() const noexcept { return issues_; }

private:
  std::vector<PreconditionIssue> issues_;
};

/// Pointwise lower bounds for the inferior semi-inner product <x,a>_i.
enum class PointBoundForm {
  quadratic,  // (|a|^2 - |x-a|^2) / 2; no precondition
  coarse,     // |x| (|a| - |x-a|) / 2; requires |a| >= |x-a|
  norm_gap,   // |a| (|a| - |x-a|); requires a != 0
};

double sip_lower_bound(const Vector& x, const Vector& a, const NormSpec& n,
                       PointBoundForm form);

/// Weighted aggregate inequalities bounding |sum_j p_j x_j| |a| from
/// below through the deviations |x_j - a|.
enum class AggregateForm {
  quadratic,  // lhs = |sum p x| |a| + (1/2) sum p |x-a|^2,     rhs = |a|^2 / 2
  coarse,     // lhs = |sum p x| |a| + (1/2) sum p |x| |x-a|,   rhs = (1/2)|a| sum p |x|
};

struct AggregateCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

AggregateCheck weighted_inequality_check(std::span<const Vector> xs,
                                         const WeightVector& ps, const Vector& a,
                                         const NormSpec& n, AggregateForm form);

/// |sum_j p_j x_j| / sum_j p_j |x_j|; requires a positive denominator.
double triangle_ratio(std::span<const Vector> xs, const WeightVector& ps,
                      const NormSpec& n);

enum class CertificateSide { lower, upper };

/// One evaluated bound: its value, whether its hypotheses were met, and
/// per-index diagnostics when they were not. Applicable lower results
/// certify ratio >= value, applicable upper results ratio <= value.
struct BoundResult {
  std::string name;
  double value = 0.0;
  bool applicable = false;
  std::vector<PreconditionIssue> diagnostics;
  CertificateSide side = CertificateSide::lower;
  std::optional<std::size_t> anchor_index;
};

/// Anchored lower bounds on the triangle ratio.
enum class RatioBoundForm {
  quadratic,  // (1/2) min_j (|a|^2 - |a-x_j|^2) / (|x_j| |a|)
  coarse,     // (|a| - max_j |x_j-a|) / (2 |a|)
  norm_gap,   // min_j (|a| - |x_j-a|) / |x_j|
  margin,     // explicit rho in (0,1); requires |a| - |x_j-a| >= rho |x_j|
};

const char* ratio_bound_name(RatioBoundForm form);

/// Evaluates an anchored ratio bound. Hypothesis failures (zero vectors,
/// zero anchor, anchor conditions) are reported in the result, not
/// thrown; boundary comparisons carry a 1e-12 relative tolerance. The
/// margin form needs an explicit rho and throws when it is absent or
/// outside (0,1).
BoundResult reverse_ratio_bound(std::span<const Vector> xs, const WeightVector& ps,
                                const Vector& a, const NormSpec& n,
                                RatioBoundForm form,
                                std::optional<double> rho = std::nullopt);

/// Self-anchored bounds at a = sum_j p_j x_j, built from certified
/// semi-inner product enclosures: the lower side uses the smallest
/// normalized inferior product r (applicable when r > 0), the upper side
/// the largest normalized superior product R (applicable when R < 1).
BoundResult self_anchor_bound(std::span<const Vector> xs, const WeightVector& ps,
                              const NormSpec& n, CertificateSide side,
                              double tol = 1e-9);

struct BoundReport {
  double ratio = 0.0;
  std::vector<Vector> anchors;  // candidates evaluated; [0] is the default
  std::vector<BoundResult> results;
  std::optional<BoundResult> best_lower;
  std::optional<BoundResult> upper_refinement;
};

/// Evaluates every anchored form on each candidate anchor plus both
/// self-anchored bounds, then selects the best applicable lower
/// certificate. With no anchors given, the single candidate is the
/// weighted mean.
BoundReport best_lower_bound(std::span<const Vector> xs, const WeightVector& ps,
                             const NormSpec& n,
                             std::span<const Vector> anchors = {},
                             double tol = 1e-9);

}  // namespace sipcert
