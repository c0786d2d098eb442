// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>

#include "orlicz/divergence.hpp"
#include "orlicz/payoff.hpp"
#include "orlicz/quantize.hpp"
#include "orlicz/solver.hpp"

namespace orlicz {

struct RegretResult {
  double value = 0.0;
  double t_star = 0.0;  // optimizing t of inf_t t (1 + E[g_eps(X/t)])
  bool converged = false;
  std::size_t iterations = 0;
};

/// V(X) = inf_{t>0} t (1 + E[g_eps(X/t)]).
///
/// Solved as the scale-only gradient flow on G(0, s) = s (eps + E[g(X/s)]),
/// s = t / eps. Throws ErrorCode::Infeasible when the regret cannot be posed
/// (alpha in (0, 1) with X unbounded above, or a moment map violating the
/// existence conditions) and ErrorCode::NonConvergence when the flow stalls.
RegretResult upper_regret(const DivergenceSpec& spec, const DiscreteSample& sample,
                          const Payoff& payoff, const SolverOptions& options = {});

/// W(X) = sup_{t>0} -t (1 + E[g_eps(-X/t)]) = -V(-X).
RegretResult lower_regret(const DivergenceSpec& spec, const DiscreteSample& sample,
                          const Payoff& payoff, const SolverOptions& options = {});

/// Amemiya norm inf_t t (1 + E[gbar(|X|/t)]) for the Young function gbar
/// (g on [0, inf), 0 below). The spec's epsilon is ignored. Solved by
/// bisection on the derivative in log t, independently of the flow solver.
double amemiya_norm(const DivergenceSpec& young, const DiscreteSample& sample,
                    const Payoff& payoff);

/// Luxemburg norm inf{lambda > 0 : E[gbar(|X|/lambda)] <= 1}.
double luxemburg_norm(const DivergenceSpec& young, const DiscreteSample& sample,
                      const Payoff& payoff);

namespace detail {
/// Throws ErrorCode::Infeasible when the upper side of (spec, payoff) has no
/// optimizer under the sample's law.
void require_upper_feasible(const DivergenceSpec& spec, const DiscreteSample& sample,
                            const Payoff& payoff);
}  // namespace detail

}  // namespace orlicz
