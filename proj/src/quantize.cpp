// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace orlicz {

DiscreteSample::DiscreteSample(std::vector<double> atoms, std::optional<GammaParams> source,
                               std::optional<int> exponent)
    : atoms_(std::move(atoms)), source_(source), exponent_(exponent) {}

DiscreteSample DiscreteSample::from_atoms(std::vector<double> atoms) {
  if (atoms.empty()) throw Error(ErrorCode::InvalidArgument, "a sample needs at least one atom");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!(atoms[i] > 0.0) || !std::isfinite(atoms[i])) {
      throw Error(ErrorCode::InvalidArgument, "atoms must be positive and finite");
    }
    if (i > 0 && !(atoms[i] > atoms[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "atoms must be strictly increasing");
    }
  }
  return DiscreteSample(std::move(atoms), std::nullopt, std::nullopt);
}

DiscreteSample quantize(const GammaParams& params, int m) {
  if (m < 1 || m > 30) {
    throw Error(ErrorCode::InvalidArgument,
                "degree-of-freedom exponent must lie in [1, 30], got " + std::to_string(m));
  }
  const std::size_t n = std::size_t{1} << m;
  const double two_n = 2.0 * static_cast<double>(n);
  std::vector<double> atoms(n);
  for (std::size_t i = 0; i < n; ++i) {
    atoms[i] = gamma_quantile(params, (2.0 * static_cast<double>(i) + 1.0) / two_n);
  }
  return DiscreteSample(std::move(atoms), params, m);
}

double mean_of(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double discretization_sup_error(const DiscreteSample& sample) {
  if (!sample.source()) {
    throw Error(ErrorCode::InvalidArgument, "discretization error needs a gamma-sourced sample");
  }
  const GammaParams& params = *sample.source();
  const auto atoms = sample.atoms();
  const double n = static_cast<double>(atoms.size());

  auto step_cdf = [&](double x) {
    const auto it = std::upper_bound(atoms.begin(), atoms.end(), x);
    return static_cast<double>(it - atoms.begin()) / n;
  };
  double sup = 0.0;
  auto probe = [&](double x) {
    if (!(x >= 0.0)) return;
    sup = std::max(sup, std::abs(gamma_cdf(params, x) - step_cdf(x)));
  };

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    probe(atoms[i]);
    probe(atoms[i] - 1e-9);
    probe(atoms[i] + 1e-9);
    if (i + 1 < atoms.size()) probe(0.5 * (atoms[i] + atoms[i + 1]));
  }
  const double top = gamma_quantile(params, 1.0 - 1.0 / (4.0 * n));
  const std::size_t uniform = 10 * atoms.size();
  for (std::size_t k = 0; k <= uniform; ++k) {
    probe(top * static_cast<double>(k) / static_cast<double>(uniform));
  }
  return sup;
}

}  // namespace orlicz
