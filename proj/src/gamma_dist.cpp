// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/gamma_dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace orlicz {

namespace {

constexpr int kMaxSeriesTerms = 100000;
constexpr double kTermTol = 1e-16;
constexpr double kTiny = 1e-300;

// log(x^a e^-x / Gamma(a))
double log_prefactor(double a, double x) { return a * std::log(x) - x - std::lgamma(a); }

// P(a, x) by its power series; used for x < a + 1.
double lower_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kTermTol) break;
  }
  return sum * std::exp(log_prefactor(a, x));
}

// Q(a, x) by the Legendre continued fraction (modified Lentz); x >= a + 1.
double upper_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxSeriesTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kTermTol) break;
  }
  return std::exp(log_prefactor(a, x)) * h;
}

double regularized_lower_gamma(double a, double x) {
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return lower_series(a, x);
  return 1.0 - upper_fraction(a, x);
}

void require_samples(std::span<const double> samples) {
  if (samples.size() < 2) {
    throw Error(ErrorCode::DegenerateSample, "at least two observations are required");
  }
}

}  // namespace

GammaParams::GammaParams(double a, double b) : shape(a), scale(b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    std::ostringstream os;
    os << "gamma parameters must be positive and finite, got a=" << a << " b=" << b;
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
}

MomentMap::MomentMap(double exponent) : exponent_(exponent) {
  if (exponent == 0.0 || !std::isfinite(exponent)) {
    throw Error(ErrorCode::InvalidArgument, "moment exponent must be finite and nonzero");
  }
}

double MomentMap::operator()(double u) const {
  if (exponent_ == 1.0) return u;
  return std::pow(u, exponent_);
}

double gamma_pdf(const GammaParams& params, double u) {
  if (!(u > 0.0)) return 0.0;
  const double a = params.shape;
  const double b = params.scale;
  const double log_p = (a - 1.0) * std::log(u) - u / b - std::lgamma(a) - a * std::log(b);
  return std::exp(log_p);
}

double gamma_cdf(const GammaParams& params, double u) {
  if (!(u > 0.0)) return 0.0;
  return regularized_lower_gamma(params.shape, u / params.scale);
}

double gamma_quantile(const GammaParams& params, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "quantile level must lie in (0, 1)");
  }
  const double a = params.shape;
  const double b = params.scale;
  double lo = 0.0;
  double hi = a * b + 10.0 * b * std::sqrt(a);
  while (gamma_cdf(params, hi) < p) {
    lo = hi;
    hi *= 2.0;
  }
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 2000; ++i) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = gamma_cdf(params, mid);
    if (std::abs(f - p) <= 1e-15) break;
    if (f < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

GammaParams fit_moment_matching(std::span<const double> samples) {
  require_samples(samples);
  const MomentSummary m = empirical_moments(samples);
  if (!(m.mean > 0.0)) {
    throw Error(ErrorCode::DegenerateSample, "sample mean must be positive for a gamma fit");
  }
  return GammaParams(m.mean * m.mean / m.variance, m.variance / m.mean);
}

MomentSummary theoretical_moments(const GammaParams& params) {
  const double a = params.shape;
  const double b = params.scale;
  return {a * b, a * b * b, 2.0 / std::sqrt(a), 6.0 / a};
}

MomentSummary empirical_moments(std::span<const double> samples) {
  require_samples(samples);
  const double k = static_cast<double>(samples.size());
  double sum = 0.0;
  for (double y : samples) sum += y;
  const double mean = sum / k;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  for (double y : samples) {
    const double d = y - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  if (*lo == *hi || !(m2 > 0.0)) {
    throw Error(ErrorCode::DegenerateSample, "sample variance is zero");
  }
  const double variance = m2 / (k - 1.0);
  m2 /= k;
  m3 /= k;
  m4 /= k;
  return {mean, variance, m3 / std::pow(m2, 1.5), m4 / (m2 * m2) - 3.0};
}

ExistenceVerdict check_existence(const DivergenceSpec& spec, const MomentMap& map,
                                 const GammaParams& params, Side side) {
  const double gamma = map.exponent();
  if (side == Side::Lower) {
    return {Feasibility::Feasible, "lower side exists for every moment exponent"};
  }
  if (spec.kind() == DivergenceKind::KullbackLeibler) {
    if (gamma > 0.0 && gamma <= 1.0) {
      return {Feasibility::Feasible, "Kullback-Leibler upper side with 0 < gamma <= 1"};
    }
    return {Feasibility::Infeasible,
            "Kullback-Leibler upper side requires 0 < gamma <= 1 (exponential moment diverges)"};
  }
  const double alpha = spec.alpha();
  if (alpha < 1.0) {
    return {Feasibility::Infeasible,
            "alpha in (0, 1): no minimizing pair exists for an unbounded nonnegative payoff"};
  }
  const double critical = -params.shape * (alpha - 1.0) / alpha;
  if (gamma > critical) {
    return {Feasibility::Feasible, "alpha > 1 upper side with gamma > -a(alpha-1)/alpha"};
  }
  if (gamma == critical) {
    return {Feasibility::SmallEpsilonOnly,
            "gamma = -a(alpha-1)/alpha: exists only for sufficiently small epsilon"};
  }
  return {Feasibility::Infeasible, "alpha > 1 upper side requires gamma >= -a(alpha-1)/alpha"};
}

}  // namespace orlicz
