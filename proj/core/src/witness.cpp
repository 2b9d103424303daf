// SPDX-License-Identifier: Apache-2.0
#include "sipcert/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "sipcert/semi_inner.hpp"

namespace sipcert {

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::quadratic: return "quadratic";
    case WitnessKind::weighted_quadratic: return "weighted-quadratic";
    case WitnessKind::ratio_quadratic: return "ratio-quadratic";
    case WitnessKind::gap: return "gap";
    case WitnessKind::ratio_gap: return "ratio-gap";
  }
  return "?";
}

std::optional<WitnessKind> witness_kind_from_string(std::string_view text) {
  if (text == "quadratic") return WitnessKind::quadratic;
  if (text == "weighted-quadratic") return WitnessKind::weighted_quadratic;
  if (text == "ratio-quadratic") return WitnessKind::ratio_quadratic;
  if (text == "gap") return WitnessKind::gap;
  if (text == "ratio-gap") return WitnessKind::ratio_gap;
  return std::nullopt;
}

bool witness_is_aggregate(WitnessKind kind) {
  return kind == WitnessKind::weighted_quadratic ||
         kind == WitnessKind::ratio_quadratic || kind == WitnessKind::ratio_gap;
}

double witness_admissible_constant(WitnessKind kind, double eps) {
  switch (kind) {
    case WitnessKind::quadratic:
    case WitnessKind::ratio_quadratic:
      return 1.0 / (2.0 - eps);
    case WitnessKind::weighted_quadratic:
      return eps + 0.5 * (1.0 - eps) * (1.0 - eps);
    case WitnessKind::gap:
    case WitnessKind::ratio_gap:
      return 1.0;
  }
  throw std::logic_error("witness_admissible_constant: unknown kind");
}

WitnessCase sharpness_witness(WitnessKind kind, const Vector& a, double eps,
                              std::size_t n_count) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("sharpness_witness: eps must lie in (0,1)");
  }
  if (a.is_zero()) {
    throw std::invalid_argument("sharpness_witness: anchor must be nonzero");
  }
  if (n_count == 0) {
    throw std::invalid_argument("sharpness_witness: n_count must be >= 1");
  }
  const std::size_t n = witness_is_aggregate(kind) ? n_count : 1;
  std::vector<Vector> xs(n, eps * a);
  return WitnessCase{kind,
                     eps,
                     a,
                     std::move(xs),
                     WeightVector::uniform(n),
                     witness_admissible_constant(kind, eps)};
}

std::vector<SlackRow> slack_curve(WitnessKind kind, const Vector& a,
                                  std::span<const double> eps_list,
                                  const NormSpec& n, std::size_t n_count) {
  if (eps_list.empty()) {
    throw std::invalid_argument("slack_curve: eps list must be nonempty");
  }
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0 && eps_list[i] < 1.0)) {
      throw std::invalid_argument("slack_curve: eps values must lie in (0,1)");
    }
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) {
      throw std::invalid_argument("slack_curve: eps values must be strictly decreasing");
    }
  }

  std::vector<SlackRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) {
    const WitnessCase w = sharpness_witness(kind, a, eps, n_count);
    SlackRow row;
    row.eps = eps;
    row.admissible_formula = w.admissible_constant;

    switch (kind) {
      case WitnessKind::quadratic: {
        row.bound_value = sip_lower_bound(w.xs[0], w.anchor, n, PointBoundForm::quadratic);
        row.reference_value = semi_inner(w.xs[0], w.anchor, n, SipSide::inferior).lo;
        // bound = (|a|^2 - |x-a|^2)/2, so twice it is the denominator of
        // the constant being probed.
        row.admissible_measured = row.reference_value / (2.0 * row.bound_value);
        break;
      }
      case WitnessKind::gap: {
        row.bound_value = sip_lower_bound(w.xs[0], w.anchor, n, PointBoundForm::norm_gap);
        row.reference_value = semi_inner(w.xs[0], w.anchor, n, SipSide::inferior).lo;
        row.admissible_measured = row.reference_value / row.bound_value;
        break;
      }
      case WitnessKind::weighted_quadratic: {
        const AggregateCheck chk = weighted_inequality_check(
            w.xs, w.weights, w.anchor, n, AggregateForm::quadratic);
        row.bound_value = chk.rhs;
        row.reference_value = chk.lhs;
        row.admissible_measured = chk.lhs / (2.0 * chk.rhs);
        break;
      }
      case WitnessKind::ratio_quadratic: {
        const BoundResult b = reverse_ratio_bound(w.xs, w.weights, w.anchor, n,
                                                  RatioBoundForm::quadratic);
        row.bound_value = b.value;
        row.reference_value = triangle_ratio(w.xs, w.weights, n);
        row.admissible_measured = row.reference_value / (2.0 * b.value);
        break;
      }
      case WitnessKind::ratio_gap: {
        const BoundResult b = reverse_ratio_bound(w.xs, w.weights, w.anchor, n,
                                                  RatioBoundForm::norm_gap);
        row.bound_value = b.value;
        row.reference_value = triangle_ratio(w.xs, w.weights, n);
        row.admissible_measured = row.reference_value / b.value;
        break;
      }
    }
    row.slack = row.reference_value - row.bound_value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sipcert
