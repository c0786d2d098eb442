// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/divergence.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::InvalidArgument,
                "uncertainty aversion epsilon must be positive and finite, got " +
                    std::to_string(epsilon));
  }
}

}  // namespace

DivergenceSpec::DivergenceSpec(DivergenceKind kind, double alpha, double epsilon)
    : kind_(kind), alpha_(alpha), epsilon_(epsilon) {
  require_epsilon(epsilon);
  if (kind == DivergenceKind::Alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
      throw Error(ErrorCode::InvalidArgument, "alpha must be positive, got " + std::to_string(alpha));
    }
    if (alpha == 1.0) {
      throw Error(ErrorCode::InvalidArgument,
                  "alpha = 1 is the Kullback-Leibler divergence; request it as such");
    }
  }
}

DivergenceSpec DivergenceSpec::kullback_leibler(double epsilon) {
  return DivergenceSpec(DivergenceKind::KullbackLeibler, 1.0, epsilon);
}

DivergenceSpec DivergenceSpec::alpha_divergence(double alpha, double epsilon) {
  return DivergenceSpec(DivergenceKind::Alpha, alpha, epsilon);
}

DivergenceSpec DivergenceSpec::with_epsilon(double epsilon) const {
  return DivergenceSpec(kind_, alpha_, epsilon);
}

double DivergenceSpec::conjugate_domain_bound() const {
  if (has_bounded_conjugate_domain()) return alpha_ / (1.0 - alpha_);
  return kInf;
}

ExtendedValue f_value(const DivergenceSpec& spec, double x) {
  if (x < 0.0) return ExtendedValue::infinity();
  if (spec.kind() == DivergenceKind::KullbackLeibler) {
    if (x == 0.0) return 1.0;  // 0 ln 0 = 0
    return x * std::log(x) - x + 1.0;
  }
  const double a = spec.alpha();
  return (std::pow(x, a) - a * x + a - 1.0) / (a - 1.0);
}

ExtendedValue g_value(const DivergenceSpec& spec, double y) {
  if (spec.kind() == DivergenceKind::KullbackLeibler) {
    const double v = std::expm1(y);
    return std::isfinite(v) ? ExtendedValue(v) : ExtendedValue::infinity();
  }
  const double a = spec.alpha();
  const double c = (a - 1.0) / a;
  const double base = 1.0 + c * y;
  if (base <= 0.0) {
    // alpha > 1: flat plus-part; alpha < 1: outside the domain.
    return a > 1.0 ? ExtendedValue(-1.0) : ExtendedValue::infinity();
  }
  const double v = std::expm1(a / (a - 1.0) * std::log1p(c * y));
  return std::isfinite(v) ? ExtendedValue(v) : ExtendedValue::infinity();
}

ExtendedValue g_eps_value(const DivergenceSpec& spec, double y) {
  const double eps = spec.epsilon();
  const ExtendedValue g = g_value(spec, eps * y);
  if (g.is_infinite()) return g;
  return g.raw() / eps;
}

double g_prime(const DivergenceSpec& spec, double y) {
  ConjugateTerms t{};
  if (!conjugate_terms(spec, y, t)) {
    throw Error(ErrorCode::Domain, "g is infinite at y = " + std::to_string(y));
  }
  return 1.0 + t.g_prime_minus_one;
}

double h_eps(const DivergenceSpec& spec, double y) {
  const double s = spec.epsilon() * y;
  if (spec.kind() == DivergenceKind::KullbackLeibler) return std::exp(s);
  const double a = spec.alpha();
  const double base = 1.0 + (a - 1.0) / a * s;
  if (base <= 0.0) {
    if (a > 1.0) return 0.0;
    throw Error(ErrorCode::Domain,
                "h_eps: plus-part argument is not positive for alpha in (0, 1)");
  }
  return std::pow(base, 1.0 / (a - 1.0));
}

}  // namespace orlicz
