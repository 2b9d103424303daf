// SPDX-License-Identifier: Apache-2.0
#include "sipcert/norm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sipcert {

namespace {

constexpr double kAxiomTol = 1e-9;

double lp_eval(std::span<const double> v, std::span<const double> w, LpExponent p) {
  const bool weighted = !w.empty();
  if (p.is_infinite()) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double t = (weighted ? w[i] : 1.0) * std::abs(v[i]);
      m = std::max(m, t);
    }
    return m;
  }
  const double pv = p.value();
  if (pv == 1.0) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (weighted ? w[i] : 1.0) * std::abs(v[i]);
    }
    return s;
  }
  // Rescale by the largest coordinate before powering so extreme
  // exponents neither overflow nor underflow.
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  if (pv == 2.0) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double u = v[i] / m;
      s += (weighted ? w[i] : 1.0) * u * u;
    }
    return m * std::sqrt(s);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double u = std::abs(v[i]) / m;
    s += (weighted ? w[i] : 1.0) * std::pow(u, pv);
  }
  return m * std::pow(s, 1.0 / pv);
}

void check_weights(const std::vector<double>& w) {
  if (w.empty()) {
    throw std::invalid_argument("NormSpec: weight vector must be nonempty");
  }
  for (double x : w) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("NormSpec: weights must be strictly positive and finite");
    }
  }
}

}  // namespace

LpExponent LpExponent::finite(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("LpExponent: p must be finite and >= 1");
  }
  LpExponent e;
  e.p_ = p;
  e.infinite_ = false;
  return e;
}

LpExponent LpExponent::infinite() noexcept {
  LpExponent e;
  e.infinite_ = true;
  return e;
}

double LpExponent::value() const {
  if (infinite_) {
    throw std::logic_error("LpExponent: infinite exponent has no finite value");
  }
  return p_;
}

NormSpec NormSpec::lp(double p) {
  NormSpec n;
  n.kind_ = NormKind::lp;
  n.p_ = LpExponent::finite(p);
  return n;
}

NormSpec NormSpec::lp_inf() {
  NormSpec n;
  n.kind_ = NormKind::lp;
  n.p_ = LpExponent::infinite();
  return n;
}

NormSpec NormSpec::weighted_lp(double p, std::vector<double> weights) {
  check_weights(weights);
  NormSpec n;
  n.kind_ = NormKind::weighted_lp;
  n.p_ = LpExponent::finite(p);
  n.weights_ = std::move(weights);
  return n;
}

NormSpec NormSpec::weighted_lp_inf(std::vector<double> weights) {
  check_weights(weights);
  NormSpec n;
  n.kind_ = NormKind::weighted_lp;
  n.p_ = LpExponent::infinite();
  n.weights_ = std::move(weights);
  return n;
}

NormSpec NormSpec::custom(std::function<double(const Vector&)> eval,
                          std::size_t sample_dim, int trials) {
  if (!eval) throw std::invalid_argument("NormSpec::custom: empty evaluator");
  auto violations = validate_norm(eval, sample_dim, trials);
  if (!violations.empty()) {
    std::string msg = "NormSpec::custom: evaluator violates norm axioms:";
    std::size_t listed = 0;
    for (const auto& v : violations) {
      if (listed++ == 4) {
        msg += " ...";
        break;
      }
      msg += ' ' + v.axiom;
    }
    throw std::invalid_argument(msg);
  }
  NormSpec n;
  n.kind_ = NormKind::custom;
  n.eval_ = std::move(eval);
  return n;
}

double NormSpec::operator()(const Vector& v) const {
  switch (kind_) {
    case NormKind::lp:
      return lp_eval(v.coords(), {}, p_);
    case NormKind::weighted_lp:
      if (v.dim() != weights_.size()) {
        throw std::invalid_argument("NormSpec: vector and weight dimensions differ");
      }
      return lp_eval(v.coords(), weights_, p_);
    case NormKind::custom: {
      const double r = eval_(v);
      if (!std::isfinite(r)) {
        throw std::runtime_error("NormSpec: custom evaluator produced a non-finite value");
      }
      return r;
    }
  }
  throw std::logic_error("NormSpec: unknown kind");
}

LpExponent NormSpec::exponent() const {
  if (kind_ == NormKind::custom) {
    throw std::logic_error("NormSpec: custom norms have no lp exponent");
  }
  return p_;
}

std::optional<std::size_t> NormSpec::required_dim() const noexcept {
  if (kind_ == NormKind::weighted_lp) return weights_.size();
  return std::nullopt;
}

std::string NormSpec::description() const {
  switch (kind_) {
    case NormKind::lp:
      return "lp:" + (p_.is_infinite() ? std::string("inf") : format_double(p_.value()));
    case NormKind::weighted_lp: {
      std::string s = "wlp:";
      s += p_.is_infinite() ? std::string("inf") : format_double(p_.value());
      s += ':';
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i > 0) s += ',';
        s += format_double(weights_[i]);
      }
      return s;
    }
    case NormKind::custom:
      return "custom";
  }
  return "?";
}

std::vector<NormAxiomViolation> validate_norm(
    const std::function<double(const Vector&)>& eval, std::size_t sample_dim,
    int trials, std::uint64_t seed) {
  if (sample_dim == 0) throw std::invalid_argument("validate_norm: sample_dim must be >= 1");
  if (trials < 1) throw std::invalid_argument("validate_norm: trials must be >= 1");

  std::vector<NormAxiomViolation> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::uniform_real_distribution<double> scalar(-2.0, 2.0);

  auto sample = [&] {
    std::vector<double> c(sample_dim);
    double biggest = 0.0;
    for (double& x : c) {
      x = coord(rng);
      biggest = std::max(biggest, std::abs(x));
    }
    if (biggest < 0.25) c[0] = 1.0;  // keep positivity witnesses clearly nonzero
    return Vector(std::move(c));
  };

  const Vector zero(std::vector<double>(sample_dim, 0.0));
  const double at_zero = eval(zero);
  if (!(std::abs(at_zero) <= kAxiomTol)) {
    out.push_back({"zero", zero, std::nullopt, 0.0, at_zero, 0.0});
  }

  for (int t = 0; t < trials; ++t) {
    const Vector u = sample();
    const Vector v = sample();
    const double a = scalar(rng);

    const double nu = eval(u);
    const double nv = eval(v);

    if (!(nu > 0.0) || !std::isfinite(nu)) {
      out.push_back({"positivity", u, std::nullopt, 0.0, nu, 0.0});
    }

    const double scaled = eval(a * u);
    const double expected = std::abs(a) * nu;
    if (!(std::abs(scaled - expected) <= kAxiomTol * (1.0 + std::abs(expected)))) {
      out.push_back({"homogeneity", u, std::nullopt, a, scaled, expected});
    }

    const double nsum = eval(u + v);
    if (!(nsum <= nu + nv + kAxiomTol * (1.0 + nu + nv))) {
      out.push_back({"triangle", u, v, 0.0, nsum, nu + nv});
    }
  }
  return out;
}

std::vector<NormAxiomViolation> validate_norm(const NormSpec& n, std::size_t sample_dim,
                                              int trials, std::uint64_t seed) {
  return validate_norm([&n](const Vector& v) { return n(v); }, sample_dim, trials, seed);
}

}  // namespace sipcert
