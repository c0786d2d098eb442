// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/regret.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace orlicz {

namespace detail {

void require_upper_feasible(const DivergenceSpec& spec, const DiscreteSample& sample,
                            const Payoff& payoff) {
  if (spec.has_bounded_conjugate_domain() && payoff.unbounded_above_on(sample)) {
    throw Error(ErrorCode::Infeasible,
                "alpha in (0, 1): no minimizing pair exists for a payoff unbounded above");
  }
  if (payoff.moment_map() && sample.source()) {
    const ExistenceVerdict verdict =
        check_existence(spec, *payoff.moment_map(), *sample.source(), Side::Upper);
    if (!verdict.feasible()) throw Error(ErrorCode::Infeasible, verdict.reason);
  }
}

}  // namespace detail

namespace {

RegretResult solve_scale_only(const DivergenceSpec& spec, const std::vector<double>& x,
                              SolverOptions options) {
  options.init_mu = 0.0;
  const OptimResult r = minimize_convolution(spec, x, options, FlowMode::ScaleOnly);
  if (!r.converged) {
    throw Error(ErrorCode::NonConvergence, "regret flow did not converge");
  }
  return {r.value, spec.epsilon() * r.t, true, r.iterations};
}

std::vector<double> absolute_values(const DiscreteSample& sample, const Payoff& payoff) {
  std::vector<double> x = payoff.evaluate(sample);
  for (double& v : x) v = std::abs(v);
  return x;
}

bool all_zero(const std::vector<double>& x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
}

// d/dt of t (1 + E[g(x/t)]) = 1 + E[g(z) - z g'(z)], z = x/t; +inf domain
// violations are reported as -inf (t is too small).
double amemiya_slope(const DivergenceSpec& young, const std::vector<double>& x, double t) {
  ConjugateTerms terms{};
  double sum = 0.0;
  for (double v : x) {
    if (!conjugate_terms(young, v / t, terms)) return -HUGE_VAL;
    sum += terms.g_minus_y_gprime;
  }
  return 1.0 + sum / static_cast<double>(x.size());
}

double amemiya_objective(const DivergenceSpec& young, const std::vector<double>& x, double t) {
  ConjugateTerms terms{};
  double sum = 0.0;
  for (double v : x) {
    if (!conjugate_terms(young, v / t, terms)) return HUGE_VAL;
    sum += terms.g;
  }
  return t * (1.0 + sum / static_cast<double>(x.size()));
}

// E[g(x/lambda)], +inf outside the domain.
double gauge(const DivergenceSpec& young, const std::vector<double>& x, double lambda) {
  double sum = 0.0;
  for (double v : x) {
    const ExtendedValue g = g_value(young, v / lambda);
    if (g.is_infinite()) return HUGE_VAL;
    sum += g.raw();
  }
  return sum / static_cast<double>(x.size());
}

}  // namespace

RegretResult upper_regret(const DivergenceSpec& spec, const DiscreteSample& sample,
                          const Payoff& payoff, const SolverOptions& options) {
  detail::require_upper_feasible(spec, sample, payoff);
  return solve_scale_only(spec, payoff.evaluate(sample), options);
}

RegretResult lower_regret(const DivergenceSpec& spec, const DiscreteSample& sample,
                          const Payoff& payoff, const SolverOptions& options) {
  std::vector<double> x = payoff.evaluate(sample);
  for (double& v : x) v = -v;
  RegretResult r = solve_scale_only(spec, x, options);
  r.value = -r.value;
  return r;
}

double amemiya_norm(const DivergenceSpec& young, const DiscreteSample& sample,
                    const Payoff& payoff) {
  const std::vector<double> x = absolute_values(sample, payoff);
  if (all_zero(x)) return 0.0;
  const DivergenceSpec g = young.with_epsilon(1.0);
  const double scale = *std::max_element(x.begin(), x.end());

  double lo = scale;
  double hi = scale;
  while (amemiya_slope(g, x, hi) <= 0.0) hi *= 2.0;
  while (amemiya_slope(g, x, lo) > 0.0) lo *= 0.5;
  for (int i = 0; i < 200 && hi > lo * (1.0 + 1e-15); ++i) {
    const double mid = std::sqrt(lo * hi);
    if (amemiya_slope(g, x, mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return std::min(amemiya_objective(g, x, lo), amemiya_objective(g, x, hi));
}

double luxemburg_norm(const DivergenceSpec& young, const DiscreteSample& sample,
                      const Payoff& payoff) {
  const std::vector<double> x = absolute_values(sample, payoff);
  if (all_zero(x)) return 0.0;
  const DivergenceSpec g = young.with_epsilon(1.0);
  const double scale = *std::max_element(x.begin(), x.end());

  double lo = scale;
  double hi = scale;
  while (gauge(g, x, hi) > 1.0) hi *= 2.0;
  while (gauge(g, x, lo) <= 1.0) lo *= 0.5;
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (gauge(g, x, mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace orlicz
