// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "orlicz/divergence.hpp"
#include "orlicz/payoff.hpp"
#include "orlicz/quantize.hpp"
#include "orlicz/solver.hpp"

namespace orlicz {

/// G(mu, t) = mu + t (eps + E[g((X - mu)/t)]) with the unscaled conjugate g;
/// +inf on domain violations.
ExtendedValue risk_objective(const DivergenceSpec& spec, const DiscreteSample& sample,
                             const Payoff& payoff, double mu, double t);

/// (dG/dmu, dG/dt). Throws ErrorCode::Domain where G is infinite.
std::pair<double, double> risk_gradient(const DivergenceSpec& spec, const DiscreteSample& sample,
                                        const Payoff& payoff, double mu, double t);

/// Worst-case overestimate sup{E_Q[X] : E_P[f(dQ/dP)] <= eps} = inf G(mu, t).
/// Throws ErrorCode::Infeasible when no minimizing pair exists and
/// ErrorCode::NonConvergence when the flow stalls or hits the iteration cap.
OptimResult upper_risk(const DivergenceSpec& spec, const DiscreteSample& sample,
                       const Payoff& payoff, const SolverOptions& options = {});

/// Worst-case underestimate inf{E_Q[X] : E_P[f(dQ/dP)] <= eps} = sup G(mu, -t).
/// The returned (mu, t) are those of the sup.
OptimResult lower_risk(const DivergenceSpec& spec, const DiscreteSample& sample,
                       const Payoff& payoff, const SolverOptions& options = {});

/// Worst-case Radon-Nikodym derivative at each atom,
/// Z = h_eps(+-(X - mu)/(eps t)) (plus for Upper, minus for Lower).
std::vector<double> rn_weights(const DivergenceSpec& spec, const DiscreteSample& sample,
                               const Payoff& payoff, const OptimResult& opt, Side side);

/// Checks on the atoms that E[Z] = 1 and E[X Z] = opt.value, both to 1e-6
/// (the latter relative). Throws ErrorCode::Normalization otherwise.
void verify_normalization(const DivergenceSpec& spec, const DiscreteSample& sample,
                          const Payoff& payoff, const OptimResult& opt, Side side);

struct DistortedDensity {
  std::vector<double> grid;
  std::vector<double> base_density;
  std::vector<double> rn_values;
  std::vector<double> product;
};

inline constexpr std::size_t kDistortionGridPoints = 512;

/// Z and p Z on `points` equispaced points in (0, q_0.9999], after
/// verify_normalization. Needs a gamma-sourced sample.
DistortedDensity rn_derivative(const DivergenceSpec& spec, const DiscreteSample& sample,
                               const Payoff& payoff, const OptimResult& opt, Side side,
                               std::size_t points = kDistortionGridPoints);

/// E_Q[1(u <= threshold)] under the worst-case measure of the identity
/// payoff, given its converged optimum.
double safety_probability(const DivergenceSpec& spec, const DiscreteSample& sample,
                          double threshold, Side side, const OptimResult& identity_opt);

/// Same, solving the identity-payoff risk problem first.
double safety_probability(const DivergenceSpec& spec, const DiscreteSample& sample,
                          double threshold, Side side, const SolverOptions& options = {});

}  // namespace orlicz
