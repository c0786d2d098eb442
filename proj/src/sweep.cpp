// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/sweep.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/quantize.hpp"
#include "orlicz/regret.hpp"

namespace orlicz {

std::vector<double> EpsilonGrid::values() const {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(std::pow(10.0, log_start));
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    // Convex combination so both endpoints are hit exactly.
    const double f = static_cast<double>(i) / static_cast<double>(count - 1);
    const double e = log_start * (1.0 - f) + log_end * f;
    out.push_back(std::pow(10.0, e));
  }
  return out;
}

DivergenceSpec RunConfig::divergence(double epsilon) const {
  // alpha = 1 is the KL limit of the alpha family.
  if (kind == DivergenceKind::KullbackLeibler || alpha == 1.0) {
    return DivergenceSpec::kullback_leibler(epsilon);
  }
  return DivergenceSpec::alpha_divergence(alpha, epsilon);
}

const char* to_string(CellStatus status) noexcept {
  switch (status) {
    case CellStatus::Ok: return "ok";
    case CellStatus::Infeasible: return "infeasible";
    case CellStatus::NonConvergence: return "nonconvergence";
    case CellStatus::Failed: return "failed";
    case CellStatus::Absent: return "absent";
  }
  return "unknown";
}

GammaParams resolve_params(const RunConfig& config) {
  if (config.params) return *config.params;
  if (config.input_path) return fit_command(*config.input_path, config.units).params;
  throw Error(ErrorCode::InvalidArgument, "either explicit gamma parameters or an input CSV is required");
}

void check_ordering(const SweepRow& row, double slack) {
  struct Link {
    const char* name;
    std::optional<double> value;
  };
  const std::array<Link, 5> chain{{{"W", row.lower_regret.ok() ? row.lower_regret.value : std::nullopt},
                                   {"R_lower", row.lower_risk.ok() ? row.lower_risk.value : std::nullopt},
                                   {"mean", row.mean},
                                   {"R_upper", row.upper_risk.ok() ? row.upper_risk.value : std::nullopt},
                                   {"V", row.upper_regret.ok() ? row.upper_regret.value : std::nullopt}}};
  const Link* prev = nullptr;
  for (const Link& link : chain) {
    if (!link.value) continue;
    if (prev && !(*prev->value <= *link.value + slack)) {
      std::ostringstream os;
      os.precision(12);
      os << "at epsilon " << row.epsilon << ": " << prev->name << " = " << *prev->value << " exceeds "
         << link.name << " = " << *link.value;
      throw Error(ErrorCode::OrderingViolation, os.str());
    }
    prev = &link;
  }
}

namespace {

CellStatus status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Infeasible: return CellStatus::Infeasible;
    case ErrorCode::NonConvergence: return CellStatus::NonConvergence;
    default: return CellStatus::Failed;
  }
}

// Runs one cell, turning library errors into a cell status.
template <class Fn>
Cell run_cell(Fn&& fn) {
  Cell cell;
  try {
    cell = fn();
    cell.status = CellStatus::Ok;
  } catch (const Error& e) {
    cell = Cell{};
    cell.status = status_of(e.code());
  }
  return cell;
}

struct Chains {
  std::optional<OptimResult> upper_risk, lower_risk;
  std::optional<double> upper_scale, lower_scale;  // s = t / eps of the regrets
};

SolverOptions seeded(const SolverOptions& base, const std::optional<OptimResult>& prev) {
  SolverOptions o = base;
  if (prev) {
    o.init_mu = prev->mu;
    o.init_t = prev->t;
  }
  return o;
}

SolverOptions seeded(const SolverOptions& base, const std::optional<double>& scale) {
  SolverOptions o = base;
  if (scale) o.init_t = *scale;
  return o;
}

}  // namespace

SweepReport run_sweep(const RunConfig& config) {
  if (config.grid.count < 1) throw Error(ErrorCode::InvalidArgument, "grid count must be at least 1");
  if (!(config.grid.log_start <= config.grid.log_end)) {
    throw Error(ErrorCode::InvalidArgument, "grid log-start must not exceed log-end");
  }
  if (config.threshold && !(*config.threshold > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
  }
  const GammaParams params = resolve_params(config);
  const DiscreteSample sample = quantize(params, config.dof);
  const Payoff identity = Payoff::identity();
  const double mean = mean_of(sample.atoms());
  // Validates kind/alpha once up front.
  (void)config.divergence(1.0);

  SweepReport report;
  report.metadata = {params.shape,    params.scale,     config.kind,  config.alpha,
                     config.dof,      config.threshold, config.units, config.timestamp};

  Chains chains;
  for (double eps : config.grid.values()) {
    const DivergenceSpec spec = config.divergence(eps);
    if (!config.warm_start) chains = {};
    SweepRow row;
    row.epsilon = eps;
    row.mean = mean;

    std::optional<OptimResult> up, lo;
    row.upper_risk = run_cell([&] {
      const OptimResult r = upper_risk(spec, sample, identity, seeded(config.solver, chains.upper_risk));
      verify_normalization(spec, sample, identity, r, Side::Upper);
      up = r;
      return Cell{r.value, CellStatus::Ok, r.iterations, r.mu, r.t};
    });
    row.lower_risk = run_cell([&] {
      const OptimResult r = lower_risk(spec, sample, identity, seeded(config.solver, chains.lower_risk));
      verify_normalization(spec, sample, identity, r, Side::Lower);
      lo = r;
      return Cell{r.value, CellStatus::Ok, r.iterations, r.mu, r.t};
    });
    row.upper_regret = run_cell([&] {
      const RegretResult r = upper_regret(spec, sample, identity, seeded(config.solver, chains.upper_scale));
      chains.upper_scale = r.t_star / eps;
      return Cell{r.value, CellStatus::Ok, r.iterations, std::nullopt, r.t_star};
    });
    row.lower_regret = run_cell([&] {
      const RegretResult r = lower_regret(spec, sample, identity, seeded(config.solver, chains.lower_scale));
      chains.lower_scale = r.t_star / eps;
      return Cell{r.value, CellStatus::Ok, r.iterations, std::nullopt, r.t_star};
    });
    if (up) chains.upper_risk = up;
    if (lo) chains.lower_risk = lo;

    if (config.threshold) {
      // The safety probability inherits its risk cell's status.
      auto safety = [&](const Cell& risk, const std::optional<OptimResult>& opt, Side side) {
        if (!opt) return Cell{std::nullopt, risk.status, 0, std::nullopt, std::nullopt};
        return run_cell([&] {
          return Cell{safety_probability(spec, sample, *config.threshold, side, *opt), CellStatus::Ok, 0,
                      std::nullopt, std::nullopt};
        });
      };
      row.upper_safety = safety(row.upper_risk, up, Side::Upper);
      row.lower_safety = safety(row.lower_risk, lo, Side::Lower);
    }

    check_ordering(row);
    report.rows.push_back(row);
  }
  return report;
}

FitSummary fit_observations(const std::vector<Observation>& observations, std::string units) {
  std::vector<double> values;
  values.reserve(observations.size());
  for (const Observation& o : observations) values.push_back(o.value);
  FitSummary out;
  out.count = values.size();
  out.params = fit_moment_matching(values);
  out.empirical = empirical_moments(values);
  out.fitted = theoretical_moments(out.params);
  out.units = std::move(units);
  return out;
}

FitSummary fit_command(const std::filesystem::path& path, std::string units) {
  return fit_observations(ingest_csv(path), std::move(units));
}

DistortedDensity distort_command(const RunConfig& config, double epsilon, Side side) {
  const GammaParams params = resolve_params(config);
  const DiscreteSample sample = quantize(params, config.dof);
  const DivergenceSpec spec = config.divergence(epsilon);
  const Payoff identity = Payoff::identity();
  const OptimResult opt = side == Side::Upper ? upper_risk(spec, sample, identity, config.solver)
                                              : lower_risk(spec, sample, identity, config.solver);
  return rn_derivative(spec, sample, identity, opt, side);
}

}  // namespace orlicz
