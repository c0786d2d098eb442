// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/risk.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "orlicz/regret.hpp"

namespace orlicz {

namespace {

constexpr double kNormalizationTol = 1e-6;

OptimResult require_converged(const OptimResult& r, const char* what) {
  if (!r.converged) {
    std::ostringstream os;
    os << what << " flow did not converge after " << r.iterations << " iterations";
    throw Error(ErrorCode::NonConvergence, os.str());
  }
  return r;
}

double sign_of(Side side) { return side == Side::Upper ? 1.0 : -1.0; }

// Z at one payoff value; +inf where the alpha in (0, 1) plus-part closes.
double rn_at(const DivergenceSpec& spec, double x, const OptimResult& opt, Side side) {
  const double y = sign_of(side) * (x - opt.mu) / (spec.epsilon() * opt.t);
  if (spec.has_bounded_conjugate_domain()) {
    const double a = spec.alpha();
    if (1.0 + (a - 1.0) / a * spec.epsilon() * y <= 0.0) {
      return std::numeric_limits<double>::infinity();
    }
  }
  return h_eps(spec, y);
}

}  // namespace

ExtendedValue risk_objective(const DivergenceSpec& spec, const DiscreteSample& sample,
                             const Payoff& payoff, double mu, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  return evaluate_convolution(spec, payoff.evaluate(sample), mu, t).value;
}

std::pair<double, double> risk_gradient(const DivergenceSpec& spec, const DiscreteSample& sample,
                                        const Payoff& payoff, double mu, double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  const ObjectivePoint p = evaluate_convolution(spec, payoff.evaluate(sample), mu, t);
  if (p.value.is_infinite()) throw Error(ErrorCode::Domain, "G is infinite at (mu, t)");
  return {p.d_mu, p.d_t};
}

OptimResult upper_risk(const DivergenceSpec& spec, const DiscreteSample& sample,
                       const Payoff& payoff, const SolverOptions& options) {
  detail::require_upper_feasible(spec, sample, payoff);
  const std::vector<double> x = payoff.evaluate(sample);
  return require_converged(minimize_convolution(spec, x, options, FlowMode::Joint), "upper risk");
}

OptimResult lower_risk(const DivergenceSpec& spec, const DiscreteSample& sample,
                       const Payoff& payoff, const SolverOptions& options) {
  // sup G(mu, -t) on X equals -inf G(mu', t) on -X with mu' = -mu.
  std::vector<double> x = payoff.evaluate(sample);
  for (double& v : x) v = -v;
  SolverOptions flipped = options;
  flipped.init_mu = -options.init_mu;
  OptimResult r =
      require_converged(minimize_convolution(spec, x, flipped, FlowMode::Joint), "lower risk");
  r.mu = -r.mu;
  r.value = -r.value;

  if (spec.has_bounded_conjugate_domain()) {
    // The maximizer keeps every atom inside the conjugate's domain:
    // 1 + (1 - alpha)/alpha (X - mu)/t > 0.
    const double a = spec.alpha();
    for (double v : x) {
      if (!(1.0 + (1.0 - a) / a * (-v - r.mu) / r.t > 0.0)) {
        throw Error(ErrorCode::Domain, "lower-risk maximizer left the conjugate's domain");
      }
    }
  }
  return r;
}

std::vector<double> rn_weights(const DivergenceSpec& spec, const DiscreteSample& sample,
                               const Payoff& payoff, const OptimResult& opt, Side side) {
  std::vector<double> z;
  z.reserve(sample.size());
  for (double x : payoff.evaluate(sample)) z.push_back(rn_at(spec, x, opt, side));
  return z;
}

void verify_normalization(const DivergenceSpec& spec, const DiscreteSample& sample,
                          const Payoff& payoff, const OptimResult& opt, Side side) {
  const std::vector<double> x = payoff.evaluate(sample);
  const std::vector<double> z = rn_weights(spec, sample, payoff, opt, side);
  double mass = 0.0;
  double moment = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    mass += z[i];
    moment += x[i] * z[i];
  }
  mass /= static_cast<double>(z.size());
  moment /= static_cast<double>(z.size());
  if (!(std::abs(mass - 1.0) <= kNormalizationTol) ||
      !(std::abs(moment - opt.value) <= kNormalizationTol * std::abs(opt.value) + 1e-12)) {
    std::ostringstream os;
    os << "worst-case measure is not normalized: E[Z] = " << mass << ", E[XZ] = " << moment
       << " vs risk " << opt.value;
    throw Error(ErrorCode::Normalization, os.str());
  }
}

DistortedDensity rn_derivative(const DivergenceSpec& spec, const DiscreteSample& sample,
                               const Payoff& payoff, const OptimResult& opt, Side side,
                               std::size_t points) {
  if (!opt.converged) throw Error(ErrorCode::InvalidArgument, "optimum is not converged");
  if (!sample.source()) {
    throw Error(ErrorCode::InvalidArgument, "distorted density needs a gamma-sourced sample");
  }
  if (points == 0) throw Error(ErrorCode::InvalidArgument, "grid needs at least one point");

  verify_normalization(spec, sample, payoff, opt, side);

  const GammaParams& params = *sample.source();
  const double top = gamma_quantile(params, 0.9999);
  DistortedDensity out;
  out.grid.reserve(points);
  for (std::size_t k = 1; k <= points; ++k) {
    const double u = top * static_cast<double>(k) / static_cast<double>(points);
    const double p = gamma_pdf(params, u);
    const double zu = rn_at(spec, payoff(u), opt, side);
    out.grid.push_back(u);
    out.base_density.push_back(p);
    out.rn_values.push_back(zu);
    out.product.push_back(p * zu);
  }
  return out;
}

double safety_probability(const DivergenceSpec& spec, const DiscreteSample& sample,
                          double threshold, Side side, const OptimResult& identity_opt) {
  if (!(threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
  const std::vector<double> z = rn_weights(spec, sample, Payoff::identity(), identity_opt, side);
  const auto atoms = sample.atoms();
  double sum = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i] <= threshold) sum += z[i];
  }
  return sum / static_cast<double>(atoms.size());
}

double safety_probability(const DivergenceSpec& spec, const DiscreteSample& sample,
                          double threshold, Side side, const SolverOptions& options) {
  const Payoff identity = Payoff::identity();
  const OptimResult opt = side == Side::Upper ? upper_risk(spec, sample, identity, options)
                                              : lower_risk(spec, sample, identity, options);
  return safety_probability(spec, sample, threshold, side, opt);
}

}  // namespace orlicz
