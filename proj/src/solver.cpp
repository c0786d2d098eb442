// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace orlicz {

namespace {

constexpr int kMaxInitialDoublings = 60;
constexpr int kMaxHalvings = 200;
constexpr double kMaxStep = 1e12;
// Slack for the monotone-descent test; J is summed over N terms and cannot be
// compared more finely than this.
constexpr double kValueSlack = 1e-13;

void validate(const SolverOptions& o) {
  if (!(o.step > 0.0) || !(o.tolerance > 0.0) || !(o.t_min > 0.0) || !(o.init_t > 0.0) ||
      !std::isfinite(o.init_mu) || !std::isfinite(o.init_t) || o.max_iterations == 0) {
    throw Error(ErrorCode::InvalidArgument, "invalid solver options");
  }
}

}  // namespace

ObjectivePoint evaluate_convolution(const DivergenceSpec& spec, std::span<const double> x,
                                    double mu, double t) {
  ObjectivePoint out;
  if (!(t > 0.0) || x.empty()) return out;
  const double inv_t = 1.0 / t;
  double sum_g = 0.0;
  double sum_gp = 0.0;
  double sum_gy = 0.0;
  ConjugateTerms terms{};
  for (double xi : x) {
    const double y = (xi - mu) * inv_t;
    if (!conjugate_terms(spec, y, terms)) return out;
    sum_g += terms.g;
    sum_gp += terms.g_prime_minus_one;
    sum_gy += terms.g_minus_y_gprime;
  }
  const double n = static_cast<double>(x.size());
  const double eps = spec.epsilon();
  const double value = mu + t * (eps + sum_g / n);
  if (!std::isfinite(value)) return out;
  out.value = value;
  out.d_mu = -sum_gp / n;
  out.d_t = eps + sum_gy / n;
  return out;
}

OptimResult minimize_convolution(const DivergenceSpec& spec, std::span<const double> x,
                                 const SolverOptions& options, FlowMode mode) {
  validate(options);
  const bool joint = mode == FlowMode::Joint;
  const double t_scale = options.scale_by_inverse_epsilon ? 1.0 / spec.epsilon() : 1.0;

  double mu = options.init_mu;
  double t = std::max(options.init_t, options.t_min);
  ObjectivePoint here = evaluate_convolution(spec, x, mu, t);
  for (int k = 0; here.value.is_infinite(); ++k) {
    if (k == kMaxInitialDoublings) {
      throw Error(ErrorCode::Infeasible,
                  "objective is infinite for every tried t; no feasible starting point");
    }
    t *= 2.0;
    here = evaluate_convolution(spec, x, mu, t);
  }

  OptimResult result;
  double h = options.step;
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    const double dir_mu = joint ? -here.d_mu : 0.0;
    const double dir_t = -t_scale * here.d_t;

    const double nominal_mu = options.step * std::abs(dir_mu);
    const double nominal_t = std::abs(std::max(t + options.step * dir_t, options.t_min) - t);
    if (nominal_mu < options.tolerance && nominal_t < options.tolerance) {
      result.converged = true;
      result.iterations = iter;
      break;
    }

    bool accepted = false;
    bool undershoot = false;
    double next_mu = mu;
    double next_t = t;
    ObjectivePoint there;
    for (int k = 0; k < kMaxHalvings; ++k, h *= 0.5) {
      next_mu = mu + h * dir_mu;
      next_t = std::max(t + h * dir_t, options.t_min);
      there = evaluate_convolution(spec, x, next_mu, next_t);
      if (there.value.is_infinite()) continue;
      const double dmu = next_mu - mu;
      const double dt = next_t - t;
      const double slope_here = here.d_mu * dmu + here.d_t * dt;
      const double slope_there = there.d_mu * dmu + there.d_t * dt;
      const double j0 = here.value.raw();
      if (there.value.raw() > j0 + kValueSlack * (1.0 + std::abs(j0))) continue;
      if (slope_there > 0.5 * std::abs(slope_here)) continue;
      accepted = true;
      undershoot = slope_there < 0.0;
      break;
    }
    result.iterations = iter + 1;
    if (!accepted) break;
    mu = next_mu;
    t = next_t;
    here = there;
    if (undershoot) h = std::min(2.0 * h, kMaxStep);
  }

  result.mu = mu;
  result.t = t;
  result.value = here.value.raw();
  return result;
}

}  // namespace orlicz
