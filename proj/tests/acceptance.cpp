// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, with timings.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orlicz/error.hpp"
#include "orlicz/regret.hpp"
#include "orlicz/risk.hpp"
#include "orlicz/sweep.hpp"

using namespace orlicz;

namespace {

const GammaParams kTN{4.6048, 0.14181};
const GammaParams kTP{0.80151, 0.054147};

struct Outcome {
  bool pass;
  std::string detail;
};

int g_failures = 0;

void report(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = o.pass;
  std::string timing = " [" + std::to_string(secs) + " s";
  if (budget_s > 0.0) {
    timing += " / budget " + std::to_string(budget_s) + " s";
    if (secs > budget_s) {
      pass = false;
      timing += ", over budget";
    }
  }
  timing += "]";
  std::printf("%s  criterion %2d: %s%s\n      %s\n", pass ? "PASS" : "FAIL", id, title, timing.c_str(),
              o.detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool within_rel(double v, double ref, double tol) { return std::abs(v / ref - 1.0) <= tol; }

// Deterministic positive sample rescaled to an exact target mean and variance.
std::vector<Observation> synthetic(double mean, double var, const GammaParams& shape_source) {
  const DiscreteSample s = quantize(shape_source, 10);
  const std::vector<double> raw(s.atoms().begin(), s.atoms().end());
  const double m = mean_of(raw);
  double v = 0.0;
  for (double x : raw) v += (x - m) * (x - m);
  v /= static_cast<double>(raw.size() - 1);
  std::vector<Observation> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.push_back({"day" + std::to_string(i), mean + std::sqrt(var / v) * (raw[i] - m)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criteria 5, 11 and 13 share the full sweeps.

struct SweepCase {
  const char* fixture;
  GammaParams params;
  double threshold;
  double alpha;  // 1 means KL
  SweepReport report;
  double seconds = 0.0;
};

std::vector<SweepCase> g_sweeps;

void run_sweeps() {
  for (const auto& [name, params, threshold] :
       {std::tuple{"TN", kTN, 1.0}, std::tuple{"TP", kTP, 0.1}}) {
    for (double alpha : {1.0, 1.5, 0.5}) {
      RunConfig c;
      c.params = params;
      c.kind = alpha == 1.0 ? DivergenceKind::KullbackLeibler : DivergenceKind::Alpha;
      c.alpha = alpha;
      c.threshold = threshold;
      SweepCase sc{name, params, threshold, alpha, {}, 0.0};
      const auto t0 = std::chrono::steady_clock::now();
      sc.report = run_sweep(c);
      sc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      g_sweeps.push_back(std::move(sc));
    }
  }
}

std::string case_name(const SweepCase& c) {
  return std::string(c.fixture) + (c.alpha == 1.0 ? " KL" : " alpha=" + fmt("%.1f", c.alpha));
}

Outcome criterion5() {
  run_sweeps();
  const double slack = 1e-7;
  std::string detail;
  bool properties_ok = true;
  bool endpoint_ok = true;
  double total = 0.0;
  for (const SweepCase& c : g_sweeps) {
    total += c.seconds;
    const bool upper = c.alpha != 0.5;
    int bad_cells = 0, order = 0, mono = 0;
    const SweepRow* prev = nullptr;
    for (const SweepRow& r : c.report.rows) {
      std::vector<const Cell*> needed{&r.lower_regret, &r.lower_risk};
      if (upper) needed.insert(needed.end(), {&r.upper_risk, &r.upper_regret});
      for (const Cell* cell : needed) bad_cells += cell->ok() ? 0 : 1;
      if (!upper && (r.upper_risk.status != CellStatus::Infeasible)) ++bad_cells;
      const double w = r.lower_regret.value.value_or(NAN), lo = r.lower_risk.value.value_or(NAN);
      if (!(w <= lo + slack && lo <= r.mean + slack)) ++order;
      if (upper) {
        const double up = r.upper_risk.value.value_or(NAN), v = r.upper_regret.value.value_or(NAN);
        if (!(r.mean <= up + slack && up <= v + slack)) ++order;
      }
      if (prev) {
        if (!(*r.lower_risk.value <= *prev->lower_risk.value + slack)) ++mono;
        if (!(*r.lower_regret.value <= *prev->lower_regret.value + slack)) ++mono;
        if (upper) {
          if (!(*r.upper_risk.value >= *prev->upper_risk.value - slack)) ++mono;
          if (!(*r.upper_regret.value >= *prev->upper_regret.value - slack)) ++mono;
        }
      }
      prev = &r;
    }
    const SweepRow& first = c.report.rows.front();
    double worst_end = std::abs(*first.lower_risk.value - first.mean);
    worst_end = std::max(worst_end, std::abs(*first.lower_regret.value - first.mean));
    double risk_end = std::abs(*first.lower_risk.value - first.mean);
    if (upper) {
      worst_end = std::max({worst_end, std::abs(*first.upper_risk.value - first.mean),
                            std::abs(*first.upper_regret.value - first.mean)});
      risk_end = std::max(risk_end, std::abs(*first.upper_risk.value - first.mean));
    }
    properties_ok = properties_ok && bad_cells == 0 && order == 0 && mono == 0 &&
                    c.report.rows.size() == 801;
    endpoint_ok = endpoint_ok && worst_end <= 1e-3;
    detail += "\n        " + case_name(c) + ": rows " + std::to_string(c.report.rows.size()) +
              ", unsolved " + std::to_string(bad_cells) + ", ordering violations " +
              std::to_string(order) + ", monotonicity violations " + std::to_string(mono) +
              ", |stat - E[X]| at eps=1e-5: risks " + fmt("%.2e", risk_end) + ", all solved " +
              fmt("%.2e", worst_end) + " (" + fmt("%.1f", c.seconds) + " s)";
  }
  // Small-eps expansion of the KL upper risk, sqrt(2 eps Var X), for context.
  const double tn_var = kTN.shape * kTN.scale * kTN.scale;
  detail = std::string("ordering + monotonicity ") + (properties_ok ? "hold" : "VIOLATED") +
           " on all 801 points; endpoint within 1e-3 " + (endpoint_ok ? "holds" : "FAILS") +
           " (TN small-eps gap sqrt(2 eps Var X) = " + fmt("%.2e", std::sqrt(2e-5 * tn_var)) +
           ", see ledger); sweeps " + fmt("%.1f", total) + " s" + detail;
  return {properties_ok && endpoint_ok && total < 300.0, detail};
}

// Z from its formula, independent of the library's weight routine.
double z_oracle(bool kl, double alpha, double eps, double y) {
  if (kl) return std::exp(eps * y);
  const double base = 1.0 + (alpha - 1.0) / alpha * eps * y;
  if (base <= 0.0) return alpha > 1.0 ? 0.0 : oracle::kInf;
  return std::pow(base, 1.0 / (alpha - 1.0));
}

Outcome criterion11() {
  std::size_t checked = 0, failed = 0;
  double worst_mass = 0.0, worst_moment = 0.0;
  for (const SweepCase& c : g_sweeps) {
    const DiscreteSample s = quantize(c.params);
    const bool kl = c.alpha == 1.0;
    for (const SweepRow& r : c.report.rows) {
      for (auto [cell, sign] : {std::pair{&r.upper_risk, 1.0}, std::pair{&r.lower_risk, -1.0}}) {
        if (!cell->ok()) continue;
        long double mass = 0, moment = 0;
        for (double x : s.atoms()) {
          const double z = z_oracle(kl, c.alpha, r.epsilon, sign * (x - *cell->mu) / (r.epsilon * *cell->t));
          mass += z;
          moment += x * z;
        }
        const double n = static_cast<double>(s.size());
        const double dm = std::abs(static_cast<double>(mass) / n - 1.0);
        const double dx = std::abs(static_cast<double>(moment) / n - *cell->value) / std::abs(*cell->value);
        worst_mass = std::max(worst_mass, dm);
        worst_moment = std::max(worst_moment, dx);
        ++checked;
        if (!(dm <= 1e-6 && dx <= 1e-6)) ++failed;
      }
    }
  }
  return {checked > 0 && failed == 0,
          std::to_string(checked) + " converged optima, " + std::to_string(failed) +
              " failures; worst |E[Z]-1| = " + fmt("%.2e", worst_mass) +
              ", worst relative |E[XZ]-R| = " + fmt("%.2e", worst_moment)};
}

Outcome criterion13() {
  std::string detail;
  bool in_band = true;
  for (const SweepCase& c : g_sweeps) {
    if (c.alpha != 1.0) continue;
    const SweepRow& top = c.report.rows.back();
    const double base = gamma_cdf(c.params, c.threshold);
    const double p = *top.upper_safety.value;
    const double abs_pp = 100.0 * (base - p);
    const double rel_pct = 100.0 * (base - p) / base;
    const bool tn = std::string(c.fixture) == "TN";
    const double lo = tn ? 4.0 : 3.0, hi = tn ? 14.0 : 11.0;
    const bool ok = (abs_pp >= lo && abs_pp <= hi) || (rel_pct >= lo && rel_pct <= hi);
    in_band = in_band && ok;
    // Largest eps whose relative reduction stays within the band.
    double eps_at_band = 0.0;
    for (const SweepRow& r : c.report.rows) {
      if (r.upper_safety.ok() && 100.0 * (base - *r.upper_safety.value) / base <= hi) eps_at_band = r.epsilon;
    }
    detail += std::string(c.fixture) + ": base P " + fmt("%.4f", base) + ", upper P at eps " +
              fmt("%.4f", top.epsilon) + " = " + fmt("%.4f", p) + " (" + fmt("%.1f", abs_pp) +
              " pp, " + fmt("%.1f", rel_pct) + "% relative; band [" + fmt("%.0f", lo) + ", " +
              fmt("%.0f", hi) + "]" + (ok ? "" : " WARNING: outside band") +
              "; relative reduction stays within the band up to eps " + fmt("%.3g", eps_at_band) + "). ";
  }
  detail += in_band ? "within band" : "soft criterion: logged as a warning, not a failure";
  return {true, detail};
}

}  // namespace

int main() {
  std::printf("orlicz acceptance suite\n");

  report(1, "moment-matching fit reproduces the fitted parameters", 1.0, [] {
    const FitSummary tn = fit_observations(synthetic(0.653, 0.0926, kTN));
    const FitSummary tp = fit_observations(synthetic(0.0434, 0.00235, kTP));
    const bool ok = within_rel(tn.params.shape, 4.60, 0.01) && within_rel(tn.params.scale, 0.142, 0.01) &&
                    within_rel(tp.params.shape, 0.801, 0.01) && within_rel(tp.params.scale, 0.0541, 0.01);
    return Outcome{ok, "TN a=" + fmt("%.4f", tn.params.shape) + " b=" + fmt("%.5f", tn.params.scale) +
                           "; TP a=" + fmt("%.4f", tp.params.shape) + " b=" + fmt("%.5f", tp.params.scale)};
  });

  report(2, "theoretical skewness and kurtosis", 1.0, [] {
    const MomentSummary tn = theoretical_moments({4.60, 0.142});
    const MomentSummary tp = theoretical_moments({0.801, 0.0541});
    const bool ok = within_rel(tn.skewness, 0.933, 0.01) && within_rel(tn.kurtosis, 1.31, 0.01) &&
                    within_rel(tp.skewness, 2.23, 0.01) && within_rel(tp.kurtosis, 7.49, 0.01);
    return Outcome{ok, "TN " + fmt("%.4f", tn.skewness) + "/" + fmt("%.4f", tn.kurtosis) + ", TP " +
                           fmt("%.4f", tp.skewness) + "/" + fmt("%.4f", tp.kurtosis)};
  });

  report(3, "no-uncertainty safety probabilities", 1.0, [] {
    const double tn = gamma_cdf({4.60, 0.142}, 1.0);
    const double tp = gamma_cdf({0.801, 0.0541}, 0.1);
    return Outcome{std::abs(tn - 0.87) <= 0.005 && std::abs(tp - 0.89) <= 0.005,
                   "TN " + fmt("%.5f", tn) + ", TP " + fmt("%.5f", tp)};
  });

  report(4, "KL upper risk vs closed-form oracle (N = 8192)", 10.0, [] {
    const DiscreteSample s = quantize(kTN);
    const std::vector<double> x(s.atoms().begin(), s.atoms().end());
    bool ok = true;
    std::string d;
    for (double eps : {1e-3, 1e-2, 1e-1}) {
      const double ref = oracle::kl_upper_closed_form(x, eps);
      const double got = upper_risk(DivergenceSpec::kullback_leibler(eps), s, Payoff::identity()).value;
      const double rel = std::abs(got / ref - 1.0);
      ok = ok && rel <= 1e-6;
      d += "eps " + fmt("%.0e", eps) + ": rel err " + fmt("%.2e", rel) + "; ";
    }
    return Outcome{ok, d};
  });

  report(5, "ordering chain, eps-monotonicity, endpoint (full sweeps)", 300.0, criterion5);

  report(6, "constant-payoff oracles", 1.0, [] {
    const DiscreteSample s = quantize(kTN, 8);
    const auto [zlo, zhi] = oracle::divergence_roots(true, 1.0, 1.0);
    const auto kl1 = DivergenceSpec::kullback_leibler(1.0);
    const double v = upper_regret(kl1, s, Payoff::constant(1.0)).value;
    const double w = lower_regret(kl1, s, Payoff::constant(1.0)).value;
    bool ok = std::abs(v - zhi) <= 1e-6 && std::abs(w - zlo) <= 1e-6 && std::abs(zhi - std::exp(1.0)) <= 1e-12;
    double worst = 0.0;
    for (double eps : {1e-5, 1e-2, 0.63}) {
      for (const auto& spec : {DivergenceSpec::kullback_leibler(eps), DivergenceSpec::alpha_divergence(1.5, eps),
                               DivergenceSpec::alpha_divergence(0.5, eps)}) {
        for (double c : {0.0, 1.0, 5.0}) {
          worst = std::max({worst, std::abs(upper_risk(spec, s, Payoff::constant(c)).value - c),
                            std::abs(lower_risk(spec, s, Payoff::constant(c)).value - c)});
        }
      }
    }
    ok = ok && worst <= 1e-8;
    return Outcome{ok, "V(1) = " + fmt("%.10f", v) + " (oracle " + fmt("%.10f", zhi) + "), W(1) = " +
                           fmt("%.2e", w) + ", worst |R(c) - c| = " + fmt("%.2e", worst)};
  });

  report(7, "three-atom brute-force duality", 30.0, [] {
    const std::array<double, 3> x{0.2, 0.7, 1.5};
    const DiscreteSample s = DiscreteSample::from_atoms({x.begin(), x.end()});
    bool ok = true;
    std::string d;
    for (double alpha : {1.0, 1.5}) {
      const bool kl = alpha == 1.0;
      const auto spec = kl ? DivergenceSpec::kullback_leibler(0.1) : DivergenceSpec::alpha_divergence(alpha, 0.1);
      const double hi = oracle::three_atom_extreme(x, kl, alpha, 0.1, true);
      const double lo = oracle::three_atom_extreme(x, kl, alpha, 0.1, false);
      const double up = upper_risk(spec, s, Payoff::identity()).value;
      const double dn = lower_risk(spec, s, Payoff::identity()).value;
      ok = ok && std::abs(up - hi) <= 1e-3 && std::abs(dn - lo) <= 1e-3;
      d += std::string(kl ? "KL" : "alpha=1.5") + ": upper " + fmt("%.6f", up) + " vs " + fmt("%.6f", hi) +
           ", lower " + fmt("%.6f", dn) + " vs " + fmt("%.6f", lo) + "; ";
    }
    return Outcome{ok, d};
  });

  report(8, "analytic gradient vs central differences", 5.0, [] {
    const DiscreteSample s = quantize(kTN, 10);
    const Payoff x = Payoff::identity();
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> mu_d(-0.5, 1.0), t_d(0.2, 5.0);
    double worst = 0.0;
    int points = 0;
    for (const auto& spec : {DivergenceSpec::kullback_leibler(0.1), DivergenceSpec::alpha_divergence(1.5, 0.1),
                             DivergenceSpec::alpha_divergence(0.5, 0.1)}) {
      int n = 0;
      while (n < 100) {
        const double mu = mu_d(rng), t = t_d(rng);
        const double hm = 1e-6 * std::max(1.0, std::abs(mu)), ht = 1e-6 * std::max(1.0, t);
        auto g = [&](double a, double b) { return risk_objective(spec, s, x, a, b); };
        const std::array<ExtendedValue, 4> probes{g(mu + hm, t), g(mu - hm, t), g(mu, t + ht), g(mu, t - ht)};
        if (g(mu, t).is_infinite() ||
            std::any_of(probes.begin(), probes.end(), [](const ExtendedValue& v) { return v.is_infinite(); })) {
          continue;
        }
        const auto [dmu, dt] = risk_gradient(spec, s, x, mu, t);
        const double fmu = (probes[0].value() - probes[1].value()) / (2 * hm);
        const double ft = (probes[2].value() - probes[3].value()) / (2 * ht);
        worst = std::max({worst, std::abs(dmu - fmu) / std::max(std::abs(fmu), 1e-3),
                          std::abs(dt - ft) / std::max(std::abs(ft), 1e-3)});
        ++n;
        ++points;
      }
    }
    return Outcome{worst <= 1e-5, std::to_string(points) + " points, worst relative error " + fmt("%.2e", worst)};
  });

  report(9, "discretization error bound and first-order mean convergence", 10.0, [] {
    bool ok = true;
    std::string d;
    for (const auto& [name, p] : {std::pair{"TN", kTN}, std::pair{"TP", kTP}}) {
      for (int m : {2, 4, 6, 8}) {
        const double err = discretization_sup_error(quantize(p, m));
        ok = ok && err <= std::ldexp(1.0, -m);
      }
      double prev = 0.0;
      std::string ratios;
      for (int m = 2; m <= 12; ++m) {
        const double e = std::abs(mean_of(quantize(p, m).atoms()) - p.shape * p.scale);
        if (m > 2) {
          const double ratio = prev / e;
          ok = ok && ratio >= 2.0 / 1.3 && ratio <= 2.0 * 1.3;
          ratios += fmt("%.2f", ratio) + " ";
        }
        prev = e;
      }
      d += std::string(name) + " sup error <= 1/N for m in {2,4,6,8}; mean-error ratios " + ratios + "; ";
    }
    return Outcome{ok, d};
  });

  report(10, "alpha = 0.5 upper risk on an unbounded payoff is infeasible", 10.0, [] {
    const DiscreteSample s = quantize(kTN);
    int infeasible = 0, total = 0;
    for (double eps : {1e-5, 1e-3, 0.1, 0.63}) {
      for (const Payoff& p : {Payoff::identity(), Payoff::moment(MomentMap(0.5))}) {
        ++total;
        try {
          upper_risk(DivergenceSpec::alpha_divergence(0.5, eps), s, p);
        } catch (const Error& e) {
          if (e.code() == ErrorCode::Infeasible) ++infeasible;
        }
      }
    }
    return Outcome{infeasible == total,
                   std::to_string(infeasible) + "/" + std::to_string(total) + " calls returned the infeasibility error"};
  });

  report(11, "worst-case measure normalization over the criterion 5 sweeps", 0.0, criterion11);

  report(12, "norm sandwich and Amemiya = unit-epsilon upper regret", 10.0, [] {
    const DiscreteSample s = quantize(kTN);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int sandwich_bad = 0, equality_bad = 0;
    double worst_gap = 0.0;
    const auto young = DivergenceSpec::kullback_leibler(1.0);
    for (int k = 0; k < 50; ++k) {
      const double a = 0.1 + 2.0 * u01(rng), g = 0.2 + 0.8 * u01(rng), b = u01(rng), cap = 0.3 + u01(rng);
      const bool capped = k % 3 == 0;
      const Payoff p = Payoff::custom(
          [=](double x) { return capped ? std::min(a * std::pow(x, g), cap) + b : a * std::pow(x, g) + b; },
          !capped);
      const double lux = luxemburg_norm(young, s, p);
      const double ame = amemiya_norm(young, s, p);
      const double v = upper_regret(young, s, p).value;
      if (!(lux <= ame * (1 + 1e-12) && ame <= 2.0 * lux * (1 + 1e-12))) ++sandwich_bad;
      const double gap = std::abs(ame - v);
      worst_gap = std::max(worst_gap, gap);
      if (gap > 1e-8) ++equality_bad;
    }
    return Outcome{sandwich_bad == 0 && equality_bad == 0,
                   "50 payoffs: sandwich failures " + std::to_string(sandwich_bad) + ", equality failures " +
                       std::to_string(equality_bad) + ", worst |amemiya - V| = " + fmt("%.2e", worst_gap)};
  });

  report(13, "KL upper safety-probability reduction at the top of the grid (soft)", 0.0, criterion13);

  std::printf("%d criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
