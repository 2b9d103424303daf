// SPDX-License-Identifier: Apache-2.0
#include "sipcert/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sipcert {

namespace {

// Hypotheses in the underlying results are non-strict inequalities;
// boundary cases like |x_j - a| = |a| must count as satisfied.
constexpr double kBoundaryRelTol = 1e-12;

bool leq_with_tol(double lhs, double rhs, double scale) {
  return lhs <= rhs + kBoundaryRelTol * std::max(1.0, scale);
}

std::vector<double> norms_of(std::span<const Vector> xs, const NormSpec& n) {
  std::vector<double> out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) out[j] = n(xs[j]);
  return out;
}

}  // namespace

WeightVector::WeightVector(std::vector<double> raw) {
  if (raw.empty()) throw std::invalid_argument("WeightVector: must be nonempty");
  double sum = 0.0;
  for (double w : raw) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("WeightVector: weights must be finite and nonnegative");
    }
    sum += w;
  }
  if (!(sum > 0.0)) throw std::invalid_argument("WeightVector: weights must not all be zero");
  renormalized_ = std::abs(sum - 1.0) > 1e-9;
  weights_ = std::move(raw);
  for (double& w : weights_) w /= sum;
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("WeightVector: must be nonempty");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double sip_lower_bound(const Vector& x, const Vector& a, const NormSpec& n,
                       PointBoundForm form) {
  require_same_dim(x, a);
  const double na = n(a);
  const double gap = n(x - a);
  switch (form) {
    case PointBoundForm::quadratic:
      return 0.5 * (na - gap) * (na + gap);
    case PointBoundForm::coarse: {
      if (!leq_with_tol(gap, na, std::max(na, gap))) {
        throw precondition_error("sip_lower_bound: coarse form requires |a| >= |x-a|",
                                 {{std::nullopt, "|x-a| exceeds |a|"}});
      }
      return 0.5 * n(x) * (na - gap);
    }
    case PointBoundForm::norm_gap:
      if (na == 0.0) {
        throw precondition_error("sip_lower_bound: norm_gap form requires a != 0",
                                 {{std::nullopt, "anchor is zero"}});
      }
      return na * (na - gap);
  }
  throw std::logic_error("sip_lower_bound: unknown form");
}

AggregateCheck weighted_inequality_check(std::span<const Vector> xs,
                                         const WeightVector& ps, const Vector& a,
                                         const NormSpec& n, AggregateForm form) {
  if (xs.empty() || xs.size() != ps.size()) {
    throw std::invalid_argument("weighted_inequality_check: xs and weights must match");
  }
  const double na = n(a);
  if (na == 0.0) {
    throw precondition_error("weighted_inequality_check: anchor must be nonzero",
                             {{std::nullopt, "anchor is zero"}});
  }

  std::vector<PreconditionIssue> issues;
  double deviation_term = 0.0;
  double rhs = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double gap = n(xs[j] - a);
    if (form == AggregateForm::quadratic) {
      deviation_term += ps[j] * gap * gap;
    } else {
      if (!leq_with_tol(gap, na, std::max(na, gap))) {
        issues.push_back({j, "|x_j - a| exceeds |a|"});
      }
      const double nx = n(xs[j]);
      deviation_term += ps[j] * nx * gap;
      rhs += ps[j] * nx;
    }
  }
  if (!issues.empty()) {
    throw precondition_error("weighted_inequality_check: coarse form hypothesis fails",
                             std::move(issues));
  }

  const double lead = n(weighted_sum(xs, ps.values())) * na;
  AggregateCheck out;
  out.lhs = lead + 0.5 * deviation_term;
  out.rhs = form == AggregateForm::quadratic ? 0.5 * na * na : 0.5 * na * rhs;
  const double scale = std::max({1.0, out.lhs, out.rhs});
  out.holds = out.lhs >= out.rhs - 1e-9 * scale;
  return out;
}

double triangle_ratio(std::span<const Vector> xs, const WeightVector& ps,
                      const NormSpec& n) {
  if (xs.empty() || xs.size() != ps.size()) {
    throw std::invalid_argument("triangle_ratio: xs and weights must match");
  }
  double denom = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) denom += ps[j] * n(xs[j]);
  if (!(denom > 0.0)) {
    throw std::invalid_argument("triangle_ratio: weighted norms sum to zero");
  }
  return n(weighted_sum(xs, ps.values())) / denom;
}

const char* ratio_bound_name(RatioBoundForm form) {
  switch (form) {
    case RatioBoundForm::quadratic: return "quadratic";
    case RatioBoundForm::coarse: return "coarse";
    case RatioBoundForm::norm_gap: return "norm_gap";
    case RatioBoundForm::margin: return "margin";
  }
  return "?";
}

BoundResult reverse_ratio_bound(std::span<const Vector> xs, const WeightVector& ps,
                                const Vector& a, const NormSpec& n,
                                RatioBoundForm form, std::optional<double> rho) {
  if (xs.empty() || xs.size() != ps.size()) {
    throw std::invalid_argument("reverse_ratio_bound: xs and weights must match");
  }
  if (form == RatioBoundForm::margin) {
    if (!rho || !(*rho > 0.0 && *rho < 1.0)) {
      throw std::invalid_argument("reverse_ratio_bound: margin form needs rho in (0,1)");
    }
  } else if (rho) {
    throw std::invalid_argument("reverse_ratio_bound: rho only applies to the margin form");
  }

  BoundResult res;
  res.name = ratio_bound_name(form);
  res.side = CertificateSide::lower;

  const double na = n(a);
  if (na == 0.0) res.diagnostics.push_back({std::nullopt, "anchor is zero"});

  const std::vector<double> nxs = norms_of(xs, n);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (nxs[j] == 0.0) res.diagnostics.push_back({j, "zero vector"});
  }

  double value = 0.0;
  bool computable = res.diagnostics.empty();
  if (computable) {
    double acc = form == RatioBoundForm::coarse
                     ? 0.0
                     : std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const double gap = n(xs[j] - a);
      switch (form) {
        case RatioBoundForm::quadratic:
          if (!leq_with_tol(gap, na, std::max(na, gap))) {
            res.diagnostics.push_back({j, "|x_j - a| exceeds |a|"});
          }
          acc = std::min(acc, (na - gap) * (na + gap) / (nxs[j] * na));
          break;
        case RatioBoundForm::coarse:
          if (!leq_with_tol(gap, na, std::max(na, gap))) {
            res.diagnostics.push_back({j, "|x_j - a| exceeds |a|"});
          }
          acc = std::max(acc, gap);
          break;
        case RatioBoundForm::norm_gap:
          if (!leq_with_tol(gap, na, std::max(na, gap))) {
            res.diagnostics.push_back({j, "|x_j - a| exceeds |a|"});
          }
          acc = std::min(acc, (na - gap) / nxs[j]);
          break;
        case RatioBoundForm::margin:
          if (!leq_with_tol(*rho * nxs[j], na - gap, std::max(na, nxs[j]))) {
            res.diagnostics.push_back({j, "|a| - |x_j - a| below rho |x_j|"});
          }
          break;
      }
    }
    switch (form) {
      case RatioBoundForm::quadratic: value = 0.5 * acc; break;
      case RatioBoundForm::coarse: value = (na - acc) / (2.0 * na); break;
      case RatioBoundForm::norm_gap: value = acc; break;
      case RatioBoundForm::margin: value = *rho; break;
    }
  }

  res.value = value;
  res.applicable = res.diagnostics.empty();
  return res;
}

BoundResult self_anchor_bound(std::span<const Vector> xs, const WeightVector& ps,
                              const NormSpec& n, CertificateSide side, double tol) {
  if (xs.empty() || xs.size() != ps.size()) {
    throw std::invalid_argument("self_anchor_bound: xs and weights must match");
  }
  BoundResult res;
  res.name = side == CertificateSide::lower ? "align_lower" : "align_upper";
  res.side = side;

  const Vector mean = weighted_sum(xs, ps.values());
  const double nmean = n(mean);
  if (nmean == 0.0) res.diagnostics.push_back({std::nullopt, "weighted mean is zero"});

  const std::vector<double> nxs = norms_of(xs, n);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (nxs[j] == 0.0) res.diagnostics.push_back({j, "zero vector"});
  }
  if (!res.diagnostics.empty()) {
    res.applicable = false;
    return res;
  }

  // Conservative endpoints keep the certificate valid under numerical
  // error: lower certificates may only shrink, upper only grow.
  double extreme = side == CertificateSide::lower
                       ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const double e = side == CertificateSide::lower
                         ? sip_certified_lower(xs[j], mean, n, tol)
                         : sip_certified_upper(xs[j], mean, n, tol);
    const double c = e / (nxs[j] * nmean);
    extreme = side == CertificateSide::lower ? std::min(extreme, c)
                                             : std::max(extreme, c);
  }

  res.value = extreme;
  if (side == CertificateSide::lower) {
    res.applicable = extreme > 0.0;
    if (!res.applicable) {
      res.diagnostics.push_back({std::nullopt, "alignment coefficient not positive"});
    }
  } else {
    res.applicable = extreme > 0.0 && extreme < 1.0;
    if (!res.applicable) {
      res.diagnostics.push_back({std::nullopt, "alignment coefficient not inside (0,1)"});
    }
  }
  return res;
}

BoundReport best_lower_bound(std::span<const Vector> xs, const WeightVector& ps,
                             const NormSpec& n, std::span<const Vector> anchors,
                             double tol) {
  BoundReport rep;
  rep.ratio = triangle_ratio(xs, ps, n);

  rep.anchors.assign(anchors.begin(), anchors.end());
  if (rep.anchors.empty()) rep.anchors.push_back(weighted_sum(xs, ps.values()));
  const bool tag_anchor = rep.anchors.size() > 1;

  for (std::size_t ai = 0; ai < rep.anchors.size(); ++ai) {
    for (RatioBoundForm form : {RatioBoundForm::quadratic, RatioBoundForm::coarse,
                                RatioBoundForm::norm_gap}) {
      BoundResult r = reverse_ratio_bound(xs, ps, rep.anchors[ai], n, form);
      r.anchor_index = ai;
      if (tag_anchor) r.name += "@" + std::to_string(ai);
      rep.results.push_back(std::move(r));
    }
  }
  rep.results.push_back(self_anchor_bound(xs, ps, n, CertificateSide::lower, tol));
  rep.results.push_back(self_anchor_bound(xs, ps, n, CertificateSide::upper, tol));

  for (const BoundResult& r : rep.results) {
    if (!r.applicable) continue;
    if (r.side == CertificateSide::lower) {
      if (!rep.best_lower || r.value > rep.best_lower->value) rep.best_lower = r;
    } else {
      rep.upper_refinement = r;
    }
  }
  return rep;
}

}  // namespace sipcert
