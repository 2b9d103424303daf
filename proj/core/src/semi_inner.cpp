// SPDX-License-Identifier: Apache-2.0
#include "sipcert/semi_inner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sipcert {

namespace {

constexpr double kClosedFormMaxP = 64.0;
constexpr int kMaxIterations = 40;
constexpr double kStepShrink = 0.25;
constexpr double kArgmaxRelTol = 1e-12;

bool closed_form_available(const NormSpec& n) {
  if (n.kind() == NormKind::custom) return false;
  const LpExponent p = n.exponent();
  return p.is_infinite() || p.value() <= kClosedFormMaxP;
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// d/ds max_k w_k |y_k + s x_k| at 0: extreme slope over the coordinates
// attaining the max. Ties are resolved with a relative tolerance because
// they are exact in intent but floating in practice.
double tau_sup(const Vector& x, const Vector& y, std::span<const double> w,
               DerivativeSide side) {
  const bool weighted = !w.empty();
  double m = 0.0;
  for (std::size_t k = 0; k < y.dim(); ++k) {
    m = std::max(m, (weighted ? w[k] : 1.0) * std::abs(y[k]));
  }
  const double thresh = m * (1.0 - kArgmaxRelTol);
  double best = side == DerivativeSide::plus ? -std::numeric_limits<double>::infinity()
                                             : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < y.dim(); ++k) {
    const double wk = weighted ? w[k] : 1.0;
    if (wk * std::abs(y[k]) >= thresh) {
      const double slope = wk * sign(y[k]) * x[k];
      best = side == DerivativeSide::plus ? std::max(best, slope) : std::min(best, slope);
    }
  }
  return best;
}

// d/ds sum_k w_k |y_k + s x_k| at 0: coordinates with y_k = 0 contribute
// -|x_k| from the left and +|x_k| from the right.
double tau_l1(const Vector& x, const Vector& y, std::span<const double> w,
              DerivativeSide side) {
  const bool weighted = !w.empty();
  double smooth = 0.0;
  double kink = 0.0;
  for (std::size_t k = 0; k < y.dim(); ++k) {
    const double wk = weighted ? w[k] : 1.0;
    if (y[k] != 0.0) {
      smooth += wk * sign(y[k]) * x[k];
    } else {
      kink += wk * std::abs(x[k]);
    }
  }
  return side == DerivativeSide::plus ? smooth + kink : smooth - kink;
}

// Smooth lp case, 1 < p < inf:
//   tau = |y|^(1-p) sum_k w_k |y_k|^(p-1) sign(y_k) x_k,
// evaluated with coordinates rescaled by max|y_k| so only values in [0,1]
// are powered.
double tau_lp_smooth(const Vector& x, const Vector& y, std::span<const double> w,
                     double p) {
  const bool weighted = !w.empty();
  double m = 0.0;
  for (std::size_t k = 0; k < y.dim(); ++k) m = std::max(m, std::abs(y[k]));
  double s1 = 0.0;  // sum w u^(p-1) sign(y) x
  double s2 = 0.0;  // sum w u^p
  for (std::size_t k = 0; k < y.dim(); ++k) {
    const double wk = weighted ? w[k] : 1.0;
    const double u = std::abs(y[k]) / m;
    if (u == 0.0) continue;
    const double up1 = std::pow(u, p - 1.0);
    s1 += wk * up1 * sign(y[k]) * x[k];
    s2 += wk * up1 * u;
  }
  return s1 * std::pow(s2, (1.0 - p) / p);
}

double tau_closed_form(const Vector& x, const Vector& y, const NormSpec& n,
                       DerivativeSide side) {
  const std::span<const double> w = n.weights();
  const LpExponent p = n.exponent();
  if (p.is_infinite()) return tau_sup(x, y, w, side);
  if (p.value() == 1.0) return tau_l1(x, y, w, side);
  return tau_lp_smooth(x, y, w, p.value());
}

// Monotone one-sided limit of (|y+sx| - |y|)/s as s -> 0 from the given
// side. Convexity makes the quotient nondecreasing in s, so from the left
// it increases toward the limit and from the right it decreases.
double tau_numeric(const Vector& x, const Vector& y, const NormSpec& n,
                   DerivativeSide side) {
  const double ny = n(y);
  const double nx = n(x);
  if (nx == 0.0) return 0.0;
  double t = ny > 0.0 ? ny / nx : 1.0;
  const double sgn = side == DerivativeSide::plus ? 1.0 : -1.0;

  auto quotient = [&](double step) {
    const double s = sgn * step;
    const double r = (n(y + s * x) - ny) / s;
    if (!std::isfinite(r)) {
      throw std::runtime_error("tau_one_sided: non-finite intermediate value");
    }
    return r;
  };

  double value = quotient(t);
  for (int k = 0; k < kMaxIterations; ++k) {
    t *= kStepShrink;
    const double next = quotient(t);
    const double refined = side == DerivativeSide::plus ? std::min(value, next)
                                                        : std::max(value, next);
    const double advance = std::abs(refined - value);
    value = refined;
    if (advance <= 1e-9 * std::max(1.0, std::abs(value))) break;
  }
  return value;
}

}  // namespace

double diff_quotient(const Vector& x, const Vector& y, const NormSpec& n, double t) {
  if (t == 0.0) throw std::invalid_argument("diff_quotient: t must be nonzero");
  require_same_dim(x, y);
  const double ny = n(y);
  const double nyt = n(y + t * x);
  const double q = (nyt - ny) * (nyt + ny) / (2.0 * t);
  if (!std::isfinite(q)) {
    throw std::runtime_error("diff_quotient: non-finite intermediate value");
  }
  return q;
}

double tau_one_sided(const Vector& x, const Vector& y, const NormSpec& n,
                     DerivativeSide side) {
  require_same_dim(x, y);
  if (y.is_zero()) {
    throw std::invalid_argument("tau_one_sided: y must be nonzero");
  }
  if (closed_form_available(n)) return tau_closed_form(x, y, n, side);
  return tau_numeric(x, y, n, side);
}

Enclosure semi_inner_numeric(const SipQuery& q) {
  require_same_dim(q.x, q.y);
  if (!(q.tol > 0.0)) throw std::invalid_argument("semi_inner: tol must be positive");
  if (q.y.is_zero()) {
    return Enclosure{0.0, 0.0, EvalMethod::numeric, true, 0};
  }

  const double ny = q.norm(q.y);
  const double nx = q.norm(q.x);
  double t = (ny > 0.0 && nx > 0.0) ? ny / nx : 1.0;

  double lo = diff_quotient(q.x, q.y, q.norm, -t);
  double hi = diff_quotient(q.x, q.y, q.norm, t);
  int k = 0;
  while (k < kMaxIterations) {
    t *= kStepShrink;
    ++k;
    // Clamp to the best bounds seen; every q(-t) is a valid lower bound
    // and every q(+t) a valid upper bound, so this only tightens.
    const double next_lo = std::max(lo, diff_quotient(q.x, q.y, q.norm, -t));
    const double next_hi = std::min(hi, diff_quotient(q.x, q.y, q.norm, t));
    const double advance = q.which == SipSide::inferior ? next_lo - lo : hi - next_hi;
    lo = next_lo;
    hi = next_hi;
    const double scale = std::max(1.0, q.which == SipSide::inferior ? std::abs(lo)
                                                                    : std::abs(hi));
    if (advance <= q.tol * scale) break;
  }
  const bool smooth = (hi - lo) <= q.tol * std::max(1.0, std::abs(0.5 * (lo + hi)));
  return Enclosure{lo, hi, EvalMethod::numeric, smooth, k};
}

Enclosure semi_inner(const SipQuery& q) {
  require_same_dim(q.x, q.y);
  if (!(q.tol > 0.0)) throw std::invalid_argument("semi_inner: tol must be positive");
  if (q.y.is_zero()) {
    // The defining quotient degenerates to t |x|^2 / 2 -> 0 from both
    // sides; the continuous extension assigns 0 to either product.
    return Enclosure{0.0, 0.0, EvalMethod::closed_form, true, 0};
  }
  if (!closed_form_available(q.norm)) return semi_inner_numeric(q);

  const double ny = q.norm(q.y);
  const double tau_minus = tau_closed_form(q.x, q.y, q.norm, DerivativeSide::minus);
  const double tau_plus = tau_closed_form(q.x, q.y, q.norm, DerivativeSide::plus);
  const double tau = q.which == SipSide::inferior ? tau_minus : tau_plus;
  const double value = tau * ny;
  if (!std::isfinite(value)) {
    throw std::runtime_error("semi_inner: non-finite intermediate value");
  }
  const bool smooth =
      std::abs(tau_plus - tau_minus) * ny <= q.tol * std::max(1.0, std::abs(value));
  return Enclosure{value, value, EvalMethod::closed_form, smooth, 0};
}

Enclosure semi_inner(const Vector& x, const Vector& y, const NormSpec& n,
                     SipSide which, double tol) {
  return semi_inner(SipQuery{x, y, n, which, tol});
}

double sip_certified_lower(const Vector& x, const Vector& y, const NormSpec& n,
                           double tol) {
  return semi_inner(SipQuery{x, y, n, SipSide::inferior, tol}).lo;
}

double sip_certified_upper(const Vector& x, const Vector& y, const NormSpec& n,
                           double tol) {
  return semi_inner(SipQuery{x, y, n, SipSide::superior, tol}).hi;
}

}  // namespace sipcert
