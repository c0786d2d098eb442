// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "orlicz/gamma_dist.hpp"
#include "orlicz/quantize.hpp"

namespace orlicz {

/// A map u -> X(u) applied to the atoms of a DiscreteSample, plus what is
/// known about its growth: whether it is unbounded above on a gamma law, and
/// whether it is a moment map u^gamma (for the existence conditions).
class Payoff {
 public:
  static Payoff identity();
  static Payoff constant(double c);
  static Payoff moment(MomentMap map);
  /// `unbounded_above` declares that X is unbounded above on the gamma
  /// support (0, inf).
  static Payoff custom(std::function<double(double)> fn, bool unbounded_above);

  double operator()(double u) const { return fn_(u); }

  const std::optional<MomentMap>& moment_map() const { return moment_; }

  /// Unbounded above under the sample's law: only a gamma-sourced sample has
  /// unbounded support.
  bool unbounded_above_on(const DiscreteSample& sample) const {
    return unbounded_above_ && sample.source().has_value();
  }

  std::vector<double> evaluate(const DiscreteSample& sample) const;

 private:
  Payoff(std::function<double(double)> fn, bool unbounded_above, std::optional<MomentMap> moment);

  std::function<double(double)> fn_;
  bool unbounded_above_;
  std::optional<MomentMap> moment_;
};

}  // namespace orlicz
