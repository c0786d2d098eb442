// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "orlicz/extended_value.hpp"
#include "orlicz/gamma_dist.hpp"

namespace orlicz {

/// A distribution replaced by N uniformly weighted atoms. Built from a gamma
/// law the atoms sit at the odd quantiles (2i-1)/(2N), N = 2^m; arbitrary
/// atom sets are accepted for small test distributions. Immutable.
class DiscreteSample {
 public:
  /// Strictly increasing positive atoms, uniform weight. No gamma source.
  static DiscreteSample from_atoms(std::vector<double> atoms);

  std::span<const double> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double weight() const { return 1.0 / static_cast<double>(atoms_.size()); }
  const std::optional<GammaParams>& source() const { return source_; }
  /// m with N = 2^m, when built by quantize().
  const std::optional<int>& exponent() const { return exponent_; }

 private:
  friend DiscreteSample quantize(const GammaParams& params, int m);
  DiscreteSample(std::vector<double> atoms, std::optional<GammaParams> source,
                 std::optional<int> exponent);

  std::vector<double> atoms_;
  std::optional<GammaParams> source_;
  std::optional<int> exponent_;
};

inline constexpr int kDefaultDofExponent = 13;

/// N = 2^m atoms at gamma_quantile((2i-1)/(2N)), i = 1..N.
DiscreteSample quantize(const GammaParams& params, int m = kDefaultDofExponent);

/// N^-1 sum_i fn(atom_i); +inf if any term is +inf.
template <class Fn>
ExtendedValue expect(const DiscreteSample& sample, Fn&& fn) {
  double sum = 0.0;
  for (double u : sample.atoms()) {
    const ExtendedValue v = fn(u);
    if (v.is_infinite()) return ExtendedValue::infinity();
    sum += v.raw();
  }
  return sum / static_cast<double>(sample.size());
}

/// Mean of precomputed per-atom values.
double mean_of(std::span<const double> values);

/// sup_x |F(x) - F_N(x)| over a dense grid (atoms +/- 1e-9, midpoints, and 10N
/// uniform points). Requires a gamma-sourced sample.
double discretization_sup_error(const DiscreteSample& sample);

}  // namespace orlicz
