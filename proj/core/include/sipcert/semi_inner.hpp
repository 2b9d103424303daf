// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "sipcert/norm.hpp"
#include "sipcert/vector.hpp"

namespace sipcert {

/// Which one-sided limit of t -> (|y+tx|^2 - |y|^2) / (2t) at 0 is wanted:
/// inferior is the limit from below, superior the limit from above.
enum class SipSide { inferior, superior };

/// Side of the one-sided derivative of s -> |y+sx| at 0.
enum class DerivativeSide { minus, plus };

enum class EvalMethod { closed_form, numeric };

/// Certified bracket around a semi-inner product.
///
/// Closed-form evaluations are degenerate intervals (lo == hi). Numeric
/// evaluations keep lo below the inferior product and hi above the
/// superior product, so either endpoint is a valid one-sided certificate.
/// smooth_detected reports that the two one-sided limits agree within the
/// query tolerance.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;
  EvalMethod method = EvalMethod::closed_form;
  bool smooth_detected = false;
  int iterations = 0;

  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
};

struct SipQuery {
  Vector x;
  Vector y;
  NormSpec norm;
  SipSide which = SipSide::inferior;
  double tol = 1e-9;  // relative to max(1, |value|)
};

/// q(t) = (|y+tx|^2 - |y|^2) / (2t), evaluated in the factored form
/// (|y+tx| - |y|)(|y+tx| + |y|) / (2t). Convexity of t -> |y+tx|^2 / 2
/// makes q nondecreasing in t, which is what the numeric bracket uses.
double diff_quotient(const Vector& x, const Vector& y, const NormSpec& n, double t);

/// One-sided derivative of s -> |y+sx| at s = 0; y must be nonzero.
///
/// Closed forms cover the lp and weighted-lp families (finite p up to 64,
/// plus the sup norm); anything else falls back to a monotone
/// difference-quotient limit.
double tau_one_sided(const Vector& x, const Vector& y, const NormSpec& n,
                     DerivativeSide side);

/// Semi-inner product enclosure. Uses the closed form tau * |y| when the
/// norm supports it and the monotone numeric bracket otherwise.
Enclosure semi_inner(const SipQuery& q);

Enclosure semi_inner(const Vector& x, const Vector& y, const NormSpec& n,
                     SipSide which, double tol = 1e-9);

/// Numeric monotone bracket, ignoring closed forms. Exposed so the two
/// evaluation routes can be cross-checked against each other.
Enclosure semi_inner_numeric(const SipQuery& q);

/// Certified one-sided values used by bound certificates: a lower bound
/// for the inferior product, an upper bound for the superior product.
double sip_certified_lower(const Vector& x, const Vector& y, const NormSpec& n,
                           double tol = 1e-9);
double sip_certified_upper(const Vector& x, const Vector& y, const NormSpec& n,
                           double tol = 1e-9);

}  // namespace sipcert
