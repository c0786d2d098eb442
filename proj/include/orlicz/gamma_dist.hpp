// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <span>
#include <string>

#include "orlicz/divergence.hpp"

namespace orlicz {

/// Gamma law with density u^{a-1} exp(-u/b) / (Gamma(a) b^a) on u > 0.
struct GammaParams {
  double shape;  // a, dimensionless
  double scale;  // b, units of the measured variable

  GammaParams(double a, double b);
};

struct MomentSummary {
  double mean;
  double variance;
  double skewness;
  double kurtosis;  // excess
};

/// The moment X(u) = u^gamma, gamma != 0.
class MomentMap {
 public:
  explicit MomentMap(double exponent);

  double exponent() const { return exponent_; }
  double operator()(double u) const;

 private:
  double exponent_;
};

double gamma_pdf(const GammaParams& params, double u);

/// Regularized lower incomplete gamma P(a, u/b).
double gamma_cdf(const GammaParams& params, double u);

/// Bisection inverse of gamma_cdf for p in (0, 1).
double gamma_quantile(const GammaParams& params, double p);

/// Moment matching: mean = ab, unbiased variance = ab^2.
GammaParams fit_moment_matching(std::span<const double> samples);

MomentSummary theoretical_moments(const GammaParams& params);

/// Sample mean, unbiased variance, and biased standardized third and fourth
/// central moments (excess kurtosis).
MomentSummary empirical_moments(std::span<const double> samples);

enum class Feasibility { Feasible, SmallEpsilonOnly, Infeasible };

struct ExistenceVerdict {
  Feasibility status;
  std::string reason;

  bool feasible() const { return status != Feasibility::Infeasible; }
};

/// Whether the regret/risk of X = u^gamma under a gamma law admits an
/// optimizing (mu, t) on the requested side.
ExistenceVerdict check_existence(const DivergenceSpec& spec, const MomentMap& map,
                                 const GammaParams& params, Side side);

}  // namespace orlicz
