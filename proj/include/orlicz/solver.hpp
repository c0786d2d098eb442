// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <span>

#include "orlicz/divergence.hpp"

namespace orlicz {

struct SolverOptions {
  double step = 0.5;         // nominal pseudo-time increment
  double tolerance = 1e-10;  // on each coordinate's nominal Euler update
  double init_mu = 0.0;
  double init_t = 10.0;
  std::size_t max_iterations = 1'000'000;
  bool scale_by_inverse_epsilon = true;
  double t_min = 1e-12;
};

/// Optimizer output in the (mu, t) parametrization of
/// G(mu, t) = mu + t (eps + E[g((X - mu)/t)]).
struct OptimResult {
  double mu = 0.0;
  double t = 0.0;
  double value = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

struct ObjectivePoint {
  ExtendedValue value = ExtendedValue::infinity();
  double d_mu = 0.0;  // dJ/dmu, meaningful only for finite value
  double d_t = 0.0;   // dJ/dt
};

/// J(mu, t) = mu + t (eps + mean_i g((x_i - mu)/t)) with the unscaled
/// conjugate g, and its gradient.
ObjectivePoint evaluate_convolution(const DivergenceSpec& spec, std::span<const double> x,
                                    double mu, double t);

enum class FlowMode {
  Joint,     // descend in (mu, t)
  ScaleOnly  // mu frozen at its initial value, descend in t
};

/// Minimizes J by the preconditioned gradient flow
///   d/dtau (mu, t) = -(dJ/dmu, eps^-1 dJ/dt)
/// integrated with explicit Euler steps. The pseudo-time increment starts at
/// `step` and adapts: a trial step is rejected (and halved) when it leaves the
/// effective domain or overshoots along its direction, and doubled after a
/// clean step. t is projected onto [t_min, inf). Convergence is declared when
/// both coordinate updates of a nominal (`step`-sized) Euler step fall below
/// `tolerance`.
///
/// Throws ErrorCode::Infeasible when J stays infinite after 60 doublings of
/// the initial t.
OptimResult minimize_convolution(const DivergenceSpec& spec, std::span<const double> x,
                                 const SolverOptions& options, FlowMode mode);

}  // namespace orlicz
