// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/orlicz.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "orlicz/error.hpp"
#include "orlicz/regret.hpp"
#include "orlicz/risk.hpp"
#include "orlicz/sweep.hpp"

using namespace orlicz;

struct orz_sample {
  DiscreteSample sample;
};

struct orz_config {
  RunConfig config;
};

struct orz_report {
  SweepReport report;
};

namespace {

thread_local std::string g_last_error;

orz_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return ORZ_INVALID_ARGUMENT;
    case ErrorCode::Domain: return ORZ_DOMAIN;
    case ErrorCode::DegenerateSample: return ORZ_DEGENERATE_SAMPLE;
    case ErrorCode::Infeasible: return ORZ_INFEASIBLE;
    case ErrorCode::NonConvergence: return ORZ_NON_CONVERGENCE;
    case ErrorCode::Normalization: return ORZ_NORMALIZATION;
    case ErrorCode::Parse: return ORZ_PARSE;
    case ErrorCode::NonMonotoneDate: return ORZ_NON_MONOTONE_DATE;
    case ErrorCode::Io: return ORZ_IO;
    case ErrorCode::OrderingViolation: return ORZ_ORDERING_VIOLATION;
  }
  return ORZ_INTERNAL;
}

template <class Fn>
orz_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ORZ_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown exception";
  }
  return ORZ_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

DivergenceSpec to_spec(const orz_divergence* d) {
  require(d, "divergence");
  if (d->kind == ORZ_KL) return DivergenceSpec::kullback_leibler(d->epsilon);
  if (d->kind == ORZ_ALPHA) return DivergenceSpec::alpha_divergence(d->alpha, d->epsilon);
  throw Error(ErrorCode::InvalidArgument, "unknown divergence kind");
}

SolverOptions to_options(const orz_solver_options* o) {
  SolverOptions s;
  if (o) {
    s.step = o->step;
    s.tolerance = o->tolerance;
    s.init_mu = o->init_mu;
    s.init_t = o->init_t;
    s.max_iterations = o->max_iterations;
  }
  if (!(s.step > 0.0) || !(s.tolerance > 0.0) || !(s.init_t > 0.0) || s.max_iterations == 0) {
    throw Error(ErrorCode::InvalidArgument, "solver step, tolerance, init_t and iteration cap must be positive");
  }
  return s;
}

Payoff power_payoff(double exponent) { return Payoff::moment(MomentMap(exponent)); }

Side to_side(orz_side s) { return s == ORZ_LOWER ? Side::Lower : Side::Upper; }

OutputFormat to_format(orz_format f) { return f == ORZ_JSON ? OutputFormat::Json : OutputFormat::Csv; }

char* duplicate(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void put(double v, double* out) {
  require(out, "output");
  *out = v;
}

}  // namespace

extern "C" {

const char* orz_last_error(void) { return g_last_error.c_str(); }

const char* orz_status_string(orz_status status) {
  if (status == ORZ_OK) return "ok";
  if (status == ORZ_INTERNAL) return "internal error";
  if (status > ORZ_OK && status < ORZ_INTERNAL) {
    return to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
  }
  return "unknown status";
}

orz_solver_options orz_solver_defaults(void) {
  const SolverOptions s;
  return {s.step, s.tolerance, s.init_mu, s.init_t, s.max_iterations};
}

orz_status orz_f(const orz_divergence* spec, double x, double* out) {
  return guarded([&] { put(f_value(to_spec(spec), x).raw(), out); });
}

orz_status orz_g(const orz_divergence* spec, double y, double* out) {
  return guarded([&] { put(g_value(to_spec(spec), y).raw(), out); });
}

orz_status orz_g_eps(const orz_divergence* spec, double y, double* out) {
  return guarded([&] { put(g_eps_value(to_spec(spec), y).raw(), out); });
}

orz_status orz_h_eps(const orz_divergence* spec, double y, double* out) {
  return guarded([&] { put(h_eps(to_spec(spec), y), out); });
}

orz_status orz_gamma_pdf(orz_gamma params, double u, double* out) {
  return guarded([&] { put(gamma_pdf(GammaParams(params.shape, params.scale), u), out); });
}

orz_status orz_gamma_cdf(orz_gamma params, double u, double* out) {
  return guarded([&] { put(gamma_cdf(GammaParams(params.shape, params.scale), u), out); });
}

orz_status orz_gamma_quantile(orz_gamma params, double p, double* out) {
  return guarded([&] { put(gamma_quantile(GammaParams(params.shape, params.scale), p), out); });
}

orz_status orz_gamma_fit(const double* samples, size_t n, orz_gamma* out) {
  return guarded([&] {
    require(samples, "samples");
    require(out, "output");
    const GammaParams p = fit_moment_matching({samples, n});
    *out = {p.shape, p.scale};
  });
}

orz_status orz_gamma_moments(orz_gamma params, orz_moments* out) {
  return guarded([&] {
    require(out, "output");
    const MomentSummary m = theoretical_moments(GammaParams(params.shape, params.scale));
    *out = {m.mean, m.variance, m.skewness, m.kurtosis};
  });
}

orz_status orz_sample_quantize(orz_gamma params, int m, orz_sample** out) {
  return guarded([&] {
    require(out, "output");
    *out = new orz_sample{quantize(GammaParams(params.shape, params.scale), m)};
  });
}

orz_status orz_sample_from_atoms(const double* atoms, size_t n, orz_sample** out) {
  return guarded([&] {
    require(atoms, "atoms");
    require(out, "output");
    *out = new orz_sample{DiscreteSample::from_atoms(std::vector<double>(atoms, atoms + n))};
  });
}

void orz_sample_free(orz_sample* sample) { delete sample; }

size_t orz_sample_size(const orz_sample* sample) { return sample ? sample->sample.size() : 0; }

const double* orz_sample_atoms(const orz_sample* sample) {
  return sample ? sample->sample.atoms().data() : nullptr;
}

orz_status orz_sample_sup_error(const orz_sample* sample, double* out) {
  return guarded([&] {
    require(sample, "sample");
    put(discretization_sup_error(sample->sample), out);
  });
}

orz_status orz_risk(const orz_divergence* spec, const orz_sample* sample, double exponent,
                    orz_side side, const orz_solver_options* options, orz_optim_result* out) {
  return guarded([&] {
    require(sample, "sample");
    require(out, "output");
    const DivergenceSpec s = to_spec(spec);
    const Payoff payoff = power_payoff(exponent);
    const SolverOptions o = to_options(options);
    const OptimResult r = side == ORZ_LOWER ? lower_risk(s, sample->sample, payoff, o)
                                            : upper_risk(s, sample->sample, payoff, o);
    *out = {r.mu, r.t, r.value, r.converged ? 1 : 0, r.iterations};
  });
}

orz_status orz_regret(const orz_divergence* spec, const orz_sample* sample, double exponent,
                      orz_side side, const orz_solver_options* options, orz_regret_result* out) {
  return guarded([&] {
    require(sample, "sample");
    require(out, "output");
    const DivergenceSpec s = to_spec(spec);
    const Payoff payoff = power_payoff(exponent);
    const SolverOptions o = to_options(options);
    const RegretResult r = side == ORZ_LOWER ? lower_regret(s, sample->sample, payoff, o)
                                             : upper_regret(s, sample->sample, payoff, o);
    *out = {r.value, r.t_star, r.converged ? 1 : 0, r.iterations};
  });
}

orz_status orz_safety_probability(const orz_divergence* spec, const orz_sample* sample,
                                  double threshold, orz_side side,
                                  const orz_solver_options* options, double* out) {
  return guarded([&] {
    require(sample, "sample");
    put(safety_probability(to_spec(spec), sample->sample, threshold, to_side(side),
                           to_options(options)),
        out);
  });
}

orz_config* orz_config_new(void) { return new (std::nothrow) orz_config{}; }

void orz_config_free(orz_config* config) { delete config; }

orz_status orz_config_set_params(orz_config* config, orz_gamma params) {
  return guarded([&] {
    require(config, "config");
    config->config.params = GammaParams(params.shape, params.scale);
    config->config.input_path.reset();
  });
}

orz_status orz_config_set_input(orz_config* config, const char* path) {
  return guarded([&] {
    require(config, "config");
    require(path, "path");
    config->config.input_path = path;
    config->config.params.reset();
  });
}

orz_status orz_config_set_divergence(orz_config* config, orz_divergence_kind kind, double alpha) {
  return guarded([&] {
    require(config, "config");
    RunConfig trial = config->config;
    trial.kind = kind == ORZ_ALPHA ? DivergenceKind::Alpha : DivergenceKind::KullbackLeibler;
    trial.alpha = kind == ORZ_ALPHA ? alpha : 1.0;
    (void)trial.divergence(1.0);
    config->config = std::move(trial);
  });
}

orz_status orz_config_set_grid(orz_config* config, double log_start, double log_end, size_t count) {
  return guarded([&] {
    require(config, "config");
    if (count < 1 || !(log_start <= log_end)) {
      throw Error(ErrorCode::InvalidArgument, "grid needs count >= 1 and log-start <= log-end");
    }
    config->config.grid = {log_start, log_end, count};
  });
}

orz_status orz_config_set_threshold(orz_config* config, double threshold) {
  return guarded([&] {
    require(config, "config");
    if (!(threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "threshold must be positive");
    config->config.threshold = threshold;
  });
}

orz_status orz_config_set_dof(orz_config* config, int m) {
  return guarded([&] {
    require(config, "config");
    if (m < 1 || m > 30) throw Error(ErrorCode::InvalidArgument, "dof exponent must be in [1, 30]");
    config->config.dof = m;
  });
}

orz_status orz_config_set_solver(orz_config* config, const orz_solver_options* options) {
  return guarded([&] {
    require(config, "config");
    require(options, "options");
    config->config.solver = to_options(options);
  });
}

orz_status orz_config_set_warm_start(orz_config* config, int enabled) {
  return guarded([&] {
    require(config, "config");
    config->config.warm_start = enabled != 0;
  });
}

orz_status orz_config_set_units(orz_config* config, const char* units) {
  return guarded([&] {
    require(config, "config");
    require(units, "units");
    config->config.units = units;
  });
}

orz_status orz_config_set_timestamp(orz_config* config, const char* timestamp) {
  return guarded([&] {
    require(config, "config");
    if (timestamp) {
      config->config.timestamp = timestamp;
    } else {
      config->config.timestamp.reset();
    }
  });
}

orz_status orz_sweep(const orz_config* config, orz_report** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "output");
    *out = new orz_report{run_sweep(config->config)};
  });
}

void orz_report_free(orz_report* report) { delete report; }

size_t orz_report_rows(const orz_report* report) { return report ? report->report.rows.size() : 0; }

orz_status orz_report_cell_counts(const orz_report* report, size_t* ok, size_t* infeasible,
                                  size_t* failed) {
  return guarded([&] {
    require(report, "report");
    size_t n_ok = 0, n_inf = 0, n_fail = 0;
    for (const SweepRow& r : report->report.rows) {
      for (const Cell* c : {&r.lower_regret, &r.lower_risk, &r.upper_risk, &r.upper_regret,
                            &r.lower_safety, &r.upper_safety}) {
        switch (c->status) {
          case CellStatus::Ok: ++n_ok; break;
          case CellStatus::Infeasible: ++n_inf; break;
          case CellStatus::NonConvergence:
          case CellStatus::Failed: ++n_fail; break;
          case CellStatus::Absent: break;
        }
      }
    }
    if (ok) *ok = n_ok;
    if (infeasible) *infeasible = n_inf;
    if (failed) *failed = n_fail;
  });
}

orz_status orz_report_emit(const orz_report* report, orz_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "output");
    *out = duplicate(emit(report->report, to_format(format)));
  });
}

orz_status orz_fit(const char* path, const char* units, orz_format format, char** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "output");
    *out = duplicate(emit_fit(fit_command(path, units ? units : "mg/L"), to_format(format)));
  });
}

orz_status orz_distort(const orz_config* config, double epsilon, orz_side side, orz_format format,
                       char** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "output");
    *out = duplicate(emit_distortion(distort_command(config->config, epsilon, to_side(side)),
                                     to_format(format)));
  });
}

void orz_string_free(char* text) { std::free(text); }

}  // extern "C"
