// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>

#include "orlicz/extended_value.hpp"

namespace orlicz {

enum class DivergenceKind { KullbackLeibler, Alpha };

/// Which side of the expectation a bound estimates.
enum class Side { Upper, Lower };

/// A divergence f (Kullback-Leibler or alpha) together with the
/// uncertainty-aversion level epsilon. Construction validates the parameters;
/// alpha == 1 must be requested as KullbackLeibler.
class DivergenceSpec {
 public:
  static DivergenceSpec kullback_leibler(double epsilon);
  static DivergenceSpec alpha_divergence(double alpha, double epsilon);

  DivergenceKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double epsilon() const { return epsilon_; }

  DivergenceSpec with_epsilon(double epsilon) const;

  /// True for the alpha family with alpha in (0, 1), where the conjugate has
  /// a finite right end of its domain.
  bool has_bounded_conjugate_domain() const {
    return kind_ == DivergenceKind::Alpha && alpha_ < 1.0;
  }

  /// Right end of dom(g) for the unscaled conjugate (+inf when unbounded).
  double conjugate_domain_bound() const;

 private:
  DivergenceSpec(DivergenceKind kind, double alpha, double epsilon);

  DivergenceKind kind_;
  double alpha_;
  double epsilon_;
};

/// f(x), extended by +inf on x < 0, with 0 ln 0 = 0.
ExtendedValue f_value(const DivergenceSpec& spec, double x);

/// Unscaled convex conjugate g(y).
ExtendedValue g_value(const DivergenceSpec& spec, double y);

/// g_eps(y) = g(eps y) / eps.
ExtendedValue g_eps_value(const DivergenceSpec& spec, double y);

/// g'(y); zero on the flat region of the alpha > 1 plus-part.
/// Throws ErrorCode::Domain where g is infinite.
double g_prime(const DivergenceSpec& spec, double y);

/// Inverse of f_eps', i.e. g'(eps y). Throws ErrorCode::Domain for alpha in
/// (0, 1) when the plus-part argument is not positive.
double h_eps(const DivergenceSpec& spec, double y);

/// Conjugate quantities needed by the gradient solvers, evaluated together
/// and in a cancellation-free form: for |y| small, g, g' - 1 and g - y g' are
/// all O(y) or O(y^2) and must be accurate to that scale.
struct ConjugateTerms {
  double g;                 // g(y)
  double g_prime_minus_one; // g'(y) - 1
  double g_minus_y_gprime;  // g(y) - y g'(y)
};

/// Returns false (and leaves `out` unspecified) where g(y) is not finite.
inline bool conjugate_terms(const DivergenceSpec& spec, double y, ConjugateTerms& out) {
  if (spec.kind() == DivergenceKind::KullbackLeibler) {
    const double e = std::expm1(y);
    if (!std::isfinite(e)) return false;
    out.g = e;
    out.g_prime_minus_one = e;
    out.g_minus_y_gprime = e - y - y * e;
    return std::isfinite(out.g_minus_y_gprime);
  }
  const double a = spec.alpha();
  const double c = (a - 1.0) / a;
  const double base = 1.0 + c * y;
  if (base <= 0.0) {
    if (a < 1.0) return false;
    out.g = -1.0;
    out.g_prime_minus_one = -1.0;
    out.g_minus_y_gprime = -1.0;
    return true;
  }
  const double cy = c * y;
  const double k = 1.0 / (a - 1.0);
  if (k == std::nearbyint(k) && std::abs(k) <= 8.0) {
    // Integer power (alpha = 1.5, 0.5, ...): exact to an ulp, no libm call.
    double p = 1.0;
    for (int i = 0; i < static_cast<int>(std::abs(k)); ++i) p *= base;
    out.g_prime_minus_one = (k > 0.0 ? p : 1.0 / p) - 1.0;
  } else {
    out.g_prime_minus_one = std::expm1(std::log1p(cy) * k);
  }
  // g = base g' - 1
  out.g = out.g_prime_minus_one * base + cy;
  // g - y g' = g' (1 - y/a) - 1
  out.g_minus_y_gprime = out.g_prime_minus_one * (1.0 - y / a) - y / a;
  return std::isfinite(out.g) && std::isfinite(out.g_minus_y_gprime);
}

}  // namespace orlicz
