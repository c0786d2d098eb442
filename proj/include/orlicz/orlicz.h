/* orlicz - paired Orlicz regrets and divergence risk bounds
 * Copyright 2026 orlicz contributors
 * Licensed under Apache 2.0
 */

#ifndef ORLICZ_ORLICZ_H
#define ORLICZ_ORLICZ_H

#include <stddef.h>

#if defined(_WIN32)
#define ORZ_API __declspec(dllexport)
#else
#define ORZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orz_status {
  ORZ_OK = 0,
  ORZ_INVALID_ARGUMENT,
  ORZ_DOMAIN,
  ORZ_DEGENERATE_SAMPLE,
  ORZ_INFEASIBLE,
  ORZ_NON_CONVERGENCE,
  ORZ_NORMALIZATION,
  ORZ_PARSE,
  ORZ_NON_MONOTONE_DATE,
  ORZ_IO,
  ORZ_ORDERING_VIOLATION,
  ORZ_INTERNAL
} orz_status;

typedef enum orz_divergence_kind { ORZ_KL = 0, ORZ_ALPHA = 1 } orz_divergence_kind;
typedef enum orz_side { ORZ_UPPER = 0, ORZ_LOWER = 1 } orz_side;
typedef enum orz_format { ORZ_CSV = 0, ORZ_JSON = 1 } orz_format;

typedef struct orz_divergence {
  orz_divergence_kind kind;
  double alpha; /* ignored for ORZ_KL */
  double epsilon;
} orz_divergence;

typedef struct orz_gamma {
  double shape;
  double scale;
} orz_gamma;

typedef struct orz_moments {
  double mean;
  double variance;
  double skewness;
  double kurtosis; /* excess */
} orz_moments;

typedef struct orz_solver_options {
  double step;
  double tolerance;
  double init_mu;
  double init_t;
  size_t max_iterations;
} orz_solver_options;

typedef struct orz_optim_result {
  double mu;
  double t;
  double value;
  int converged;
  size_t iterations;
} orz_optim_result;

typedef struct orz_regret_result {
  double value;
  double t_star;
  int converged;
  size_t iterations;
} orz_regret_result;

/* Message of the last failed call on this thread ("" after success). */
ORZ_API const char* orz_last_error(void);
ORZ_API const char* orz_status_string(orz_status status);
ORZ_API orz_solver_options orz_solver_defaults(void);

/* Divergence pieces; +inf is returned as HUGE_VAL. */
ORZ_API orz_status orz_f(const orz_divergence* spec, double x, double* out);
ORZ_API orz_status orz_g(const orz_divergence* spec, double y, double* out);
ORZ_API orz_status orz_g_eps(const orz_divergence* spec, double y, double* out);
ORZ_API orz_status orz_h_eps(const orz_divergence* spec, double y, double* out);

/* Gamma law. */
ORZ_API orz_status orz_gamma_pdf(orz_gamma params, double u, double* out);
ORZ_API orz_status orz_gamma_cdf(orz_gamma params, double u, double* out);
ORZ_API orz_status orz_gamma_quantile(orz_gamma params, double p, double* out);
ORZ_API orz_status orz_gamma_fit(const double* samples, size_t n, orz_gamma* out);
ORZ_API orz_status orz_gamma_moments(orz_gamma params, orz_moments* out);

/* Discretized law: opaque handle. */
typedef struct orz_sample orz_sample;

ORZ_API orz_status orz_sample_quantize(orz_gamma params, int m, orz_sample** out);
ORZ_API orz_status orz_sample_from_atoms(const double* atoms, size_t n, orz_sample** out);
ORZ_API void orz_sample_free(orz_sample* sample);
ORZ_API size_t orz_sample_size(const orz_sample* sample);
ORZ_API const double* orz_sample_atoms(const orz_sample* sample);
ORZ_API orz_status orz_sample_sup_error(const orz_sample* sample, double* out);

/* Payoff X = u^exponent (exponent 1 is the identity). `options` may be NULL. */
ORZ_API orz_status orz_risk(const orz_divergence* spec, const orz_sample* sample, double exponent,
                            orz_side side, const orz_solver_options* options,
                            orz_optim_result* out);
ORZ_API orz_status orz_regret(const orz_divergence* spec, const orz_sample* sample,
                              double exponent, orz_side side, const orz_solver_options* options,
                              orz_regret_result* out);
ORZ_API orz_status orz_safety_probability(const orz_divergence* spec, const orz_sample* sample,
                                          double threshold, orz_side side,
                                          const orz_solver_options* options, double* out);

/* Sweep configuration and report: opaque handles. */
typedef struct orz_config orz_config;
typedef struct orz_report orz_report;

ORZ_API orz_config* orz_config_new(void);
ORZ_API void orz_config_free(orz_config* config);
ORZ_API orz_status orz_config_set_params(orz_config* config, orz_gamma params);
ORZ_API orz_status orz_config_set_input(orz_config* config, const char* path);
ORZ_API orz_status orz_config_set_divergence(orz_config* config, orz_divergence_kind kind,
                                             double alpha);
ORZ_API orz_status orz_config_set_grid(orz_config* config, double log_start, double log_end,
                                       size_t count);
ORZ_API orz_status orz_config_set_threshold(orz_config* config, double threshold);
ORZ_API orz_status orz_config_set_dof(orz_config* config, int m);
ORZ_API orz_status orz_config_set_solver(orz_config* config, const orz_solver_options* options);
ORZ_API orz_status orz_config_set_warm_start(orz_config* config, int enabled);
ORZ_API orz_status orz_config_set_units(orz_config* config, const char* units);
ORZ_API orz_status orz_config_set_timestamp(orz_config* config, const char* timestamp);

ORZ_API orz_status orz_sweep(const orz_config* config, orz_report** out);
ORZ_API void orz_report_free(orz_report* report);
ORZ_API size_t orz_report_rows(const orz_report* report);
/* Counts of ok, infeasible and failed (non-converged or otherwise) cells. */
ORZ_API orz_status orz_report_cell_counts(const orz_report* report, size_t* ok,
                                          size_t* infeasible, size_t* failed);

/* Text outputs are malloc'd; release with orz_string_free. */
ORZ_API orz_status orz_report_emit(const orz_report* report, orz_format format, char** out);
ORZ_API orz_status orz_fit(const char* path, const char* units, orz_format format, char** out);
ORZ_API orz_status orz_distort(const orz_config* config, double epsilon, orz_side side,
                               orz_format format, char** out);
ORZ_API void orz_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* ORLICZ_ORLICZ_H */
