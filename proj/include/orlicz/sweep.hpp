// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orlicz/divergence.hpp"
#include "orlicz/gamma_dist.hpp"
#include "orlicz/risk.hpp"
#include "orlicz/solver.hpp"

namespace orlicz {

// ---------------------------------------------------------------------------
// Ingestion

struct Observation {
  std::string date;  // ISO-8601 as read
  double value;
};

/// Two columns: ISO-8601 date (YYYY-MM-DD, optionally followed by
/// THH:MM[:SS]) and a positive decimal value. A header row is recognized by a
/// non-numeric second field on the first line. Dates must strictly increase.
std::vector<Observation> parse_observations(std::istream& in);
std::vector<Observation> ingest_csv(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Sweep configuration and report

/// eps_i = 10^(log_start + i (log_end - log_start)/(count - 1)), i = 0..count-1.
/// The default is 10^(-5 + 6i/1000), i = 0..800.
struct EpsilonGrid {
  double log_start = -5.0;
  double log_end = -0.2;
  std::size_t count = 801;

  std::vector<double> values() const;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::optional<std::filesystem::path> input_path;
  std::optional<GammaParams> params;
  DivergenceKind kind = DivergenceKind::KullbackLeibler;
  double alpha = 1.0;
  EpsilonGrid grid;
  std::optional<double> threshold;
  int dof = kDefaultDofExponent;
  SolverOptions solver;
  bool warm_start = true;
  std::string units = "mg/L";
  std::optional<std::string> timestamp;

  DivergenceSpec divergence(double epsilon) const;
};

enum class CellStatus { Ok, Infeasible, NonConvergence, Failed, Absent };

const char* to_string(CellStatus status) noexcept;

struct Cell {
  std::optional<double> value;
  CellStatus status = CellStatus::Absent;
  std::size_t iterations = 0;
  // Optimizer location: (mu, t) for risks, t_star alone for regrets.
  std::optional<double> mu;
  std::optional<double> t;

  bool ok() const { return status == CellStatus::Ok; }
};

struct SweepRow {
  double epsilon = 0.0;
  Cell lower_regret;    // W
  Cell lower_risk;      // R_lower
  double mean = 0.0;    // E[X] on the discretized law
  Cell upper_risk;      // R_upper
  Cell upper_regret;    // V
  Cell lower_safety;    // P_lower
  Cell upper_safety;    // P_upper
};

struct SweepMetadata {
  double shape = 0.0;
  double scale = 0.0;
  DivergenceKind kind = DivergenceKind::KullbackLeibler;
  double alpha = 1.0;
  int dof = kDefaultDofExponent;
  std::optional<double> threshold;
  std::string units;
  std::optional<std::string> timestamp;
};

struct SweepReport {
  SweepMetadata metadata;
  std::vector<SweepRow> rows;
};

/// Explicit params if given, else a moment-matching fit of the input CSV.
GammaParams resolve_params(const RunConfig& config);

/// Throws ErrorCode::OrderingViolation unless
/// W <= R_lower <= mean <= R_upper <= V holds over the row's computed cells.
void check_ordering(const SweepRow& row, double slack = 1e-7);

/// Per-epsilon W, R_lower, E[X], R_upper, V and (with a threshold) both safety
/// probabilities for the identity payoff. Cell failures are recorded, not
/// thrown; an ordering violation aborts.
SweepReport run_sweep(const RunConfig& config);

/// CSV: `epsilon,W,R_lower,mean,R_upper,V,P_lower,P_upper`, 12 significant
/// digits in scientific notation, empty fields for missing cells.
/// JSON: metadata object and rows array, full precision, null for missing.
std::string emit(const SweepReport& report, OutputFormat format);

SweepReport parse_report_json(std::string_view json);

// ---------------------------------------------------------------------------
// Fit and distortion commands

struct FitSummary {
  std::size_t count = 0;
  GammaParams params{1.0, 1.0};
  MomentSummary empirical{};
  MomentSummary fitted{};
  std::string units;
};

FitSummary fit_command(const std::filesystem::path& path, std::string units = "mg/L");
FitSummary fit_observations(const std::vector<Observation>& observations,
                            std::string units = "mg/L");
std::string emit_fit(const FitSummary& fit, OutputFormat format);

DistortedDensity distort_command(const RunConfig& config, double epsilon, Side side);
std::string emit_distortion(const DistortedDensity& table, OutputFormat format);

}  // namespace orlicz
