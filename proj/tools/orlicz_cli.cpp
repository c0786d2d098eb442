// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0
//
// Command-line front end: fit, sweep, distort.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orlicz/orlicz.h"

namespace {

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kInfeasible = 3, kSolver = 4 };

struct Options {
  std::string params;
  std::string input;
  std::string divergence = "kl";
  double alpha = 1.0;
  std::string grid;
  std::optional<double> threshold;
  int dof = 13;
  orz_solver_options solver = orz_solver_defaults();
  std::string format = "csv";
  bool cold_start = false;
  std::string output;
  std::string units = "mg/L";
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(orz_status s) {
  switch (s) {
    case ORZ_OK: return kOk;
    case ORZ_INVALID_ARGUMENT:
    case ORZ_DOMAIN:
    case ORZ_DEGENERATE_SAMPLE:
    case ORZ_PARSE:
    case ORZ_NON_MONOTONE_DATE:
    case ORZ_IO: return kInput;
    case ORZ_INFEASIBLE: return kInfeasible;
    case ORZ_NON_CONVERGENCE:
    case ORZ_NORMALIZATION:
    case ORZ_ORDERING_VIOLATION: return kSolver;
    case ORZ_INTERNAL: break;
  }
  return kInternal;
}

void check(orz_status s) {
  if (s != ORZ_OK) throw s;
}

std::vector<double> split_numbers(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw InputError(std::string("bad number in ") + what);
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw InputError(std::string(what) + " expects " + std::to_string(expected) + " comma-separated values");
  }
  return out;
}

void add_shared(CLI::App* cmd, Options& o) {
  auto* params = cmd->add_option("--params", o.params, "Gamma shape and scale, a,b");
  auto* input = cmd->add_option("--input", o.input, "Observation CSV (date,value) to fit");
  params->excludes(input);
  cmd->add_option("--divergence", o.divergence, "kl or alpha")->check(CLI::IsMember({"kl", "alpha"}));
  cmd->add_option("--alpha", o.alpha, "Alpha-divergence order");
  cmd->add_option("--eps-grid", o.grid, "logstart,logend,count");
  cmd->add_option("--threshold", o.threshold, "Regulatory threshold for safety probabilities");
  cmd->add_option("--dof", o.dof, "Discretization exponent m, N = 2^m")->check(CLI::Range(1, 30));
  cmd->add_option("--step", o.solver.step, "Pseudo-time increment");
  cmd->add_option("--tol", o.solver.tolerance, "Convergence tolerance");
  cmd->add_option("--init-mu", o.solver.init_mu, "Initial mu");
  cmd->add_option("--init-t", o.solver.init_t, "Initial t");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--cold-start", o.cold_start, "Restart every solve from the initial point");
  cmd->add_option("--output", o.output, "Write to this path instead of stdout");
  cmd->add_option("--units", o.units, "Units label carried in metadata");
}

orz_format format_of(const Options& o) { return o.format == "json" ? ORZ_JSON : ORZ_CSV; }

struct ConfigHandle {
  orz_config* p = orz_config_new();
  ~ConfigHandle() { orz_config_free(p); }
};

std::optional<std::string> build_timestamp() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (!epoch || !*epoch) return std::nullopt;
  char* end = nullptr;
  const long long secs = std::strtoll(epoch, &end, 10);
  if (*end != '\0') throw InputError("SOURCE_DATE_EPOCH is not an integer");
  const std::time_t t = static_cast<std::time_t>(secs);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

void configure(orz_config* c, const Options& o) {
  if (!c) throw ORZ_INTERNAL;
  if (!o.params.empty()) {
    const auto ab = split_numbers(o.params, 2, "--params");
    check(orz_config_set_params(c, {ab[0], ab[1]}));
  } else if (!o.input.empty()) {
    check(orz_config_set_input(c, o.input.c_str()));
  } else {
    throw InputError("one of --params or --input is required");
  }
  check(orz_config_set_divergence(c, o.divergence == "alpha" ? ORZ_ALPHA : ORZ_KL, o.alpha));
  if (!o.grid.empty()) {
    const auto g = split_numbers(o.grid, 3, "--eps-grid");
    if (!(g[2] >= 1.0) || g[2] != static_cast<double>(static_cast<std::size_t>(g[2]))) {
      throw InputError("--eps-grid count must be a positive integer");
    }
    check(orz_config_set_grid(c, g[0], g[1], static_cast<std::size_t>(g[2])));
  }
  if (o.threshold) check(orz_config_set_threshold(c, *o.threshold));
  check(orz_config_set_dof(c, o.dof));
  check(orz_config_set_solver(c, &o.solver));
  check(orz_config_set_warm_start(c, o.cold_start ? 0 : 1));
  check(orz_config_set_units(c, o.units.c_str()));
  const auto stamp = build_timestamp();
  check(orz_config_set_timestamp(c, stamp ? stamp->c_str() : nullptr));
}

void write_out(const Options& o, char* text) {
  const std::string body = text ? text : "";
  orz_string_free(text);
  if (o.output.empty()) {
    std::cout << body << std::flush;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f || !(f << body) || !f.flush()) throw InputError("cannot write " + o.output);
}

int run_fit(const Options& o, const std::string& positional) {
  const std::string path = !positional.empty() ? positional : o.input;
  if (path.empty()) throw InputError("fit needs a CSV path");
  char* text = nullptr;
  check(orz_fit(path.c_str(), o.units.c_str(), format_of(o), &text));
  write_out(o, text);
  return kOk;
}

int run_sweep(const Options& o) {
  ConfigHandle c;
  configure(c.p, o);
  orz_report* report = nullptr;
  check(orz_sweep(c.p, &report));
  std::size_t ok = 0, infeasible = 0, failed = 0;
  char* text = nullptr;
  const orz_status s1 = orz_report_cell_counts(report, &ok, &infeasible, &failed);
  const orz_status s2 = orz_report_emit(report, format_of(o), &text);
  orz_report_free(report);
  check(s1);
  check(s2);
  write_out(o, text);
  if (failed > 0) {
    std::cerr << "orlicz: " << failed << " cell(s) did not converge\n";
    return kSolver;
  }
  if (ok == 0 && infeasible > 0) {
    std::cerr << "orlicz: infeasible at every epsilon\n";
    return kInfeasible;
  }
  return kOk;
}

int run_distort(const Options& o, double epsilon, const std::string& side) {
  ConfigHandle c;
  configure(c.p, o);
  char* text = nullptr;
  check(orz_distort(c.p, epsilon, side == "lower" ? ORZ_LOWER : ORZ_UPPER, format_of(o), &text));
  write_out(o, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paired Orlicz regrets and divergence risk bounds"};
  app.require_subcommand(1);
  Options opts;

  std::string fit_path;
  auto* fit = app.add_subcommand("fit", "Moment-matching gamma fit of an observation CSV");
  fit->add_option("csv", fit_path, "Observation CSV (date,value)");
  add_shared(fit, opts);

  auto* sweep = app.add_subcommand("sweep", "Bounds over an epsilon grid");
  add_shared(sweep, opts);

  double epsilon = 0.1;
  std::string side = "upper";
  auto* distort = app.add_subcommand("distort", "Worst-case distorted density at one epsilon");
  add_shared(distort, opts);
  distort->add_option("--epsilon", epsilon, "Uncertainty budget")->check(CLI::PositiveNumber);
  distort->add_option("--side", side, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*fit) return run_fit(opts, fit_path);
    if (*sweep) return run_sweep(opts);
    return run_distort(opts, epsilon, side);
  } catch (const InputError& e) {
    std::cerr << "orlicz: " << e.what() << '\n';
    return kInput;
  } catch (orz_status s) {
    std::cerr << "orlicz: " << orz_status_string(s) << ": " << orz_last_error() << '\n';
    return exit_for(s);
  }
}
