// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include "orlicz/payoff.hpp"

#include <cmath>
#include <utility>

namespace orlicz {

Payoff::Payoff(std::function<double(double)> fn, bool unbounded_above,
               std::optional<MomentMap> moment)
    : fn_(std::move(fn)), unbounded_above_(unbounded_above), moment_(moment) {}

Payoff Payoff::identity() { return moment(MomentMap(1.0)); }

Payoff Payoff::constant(double c) {
  if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "constant payoff must be finite");
  return Payoff([c](double) { return c; }, false, std::nullopt);
}

Payoff Payoff::moment(MomentMap map) {
  // u^gamma blows up at u -> inf for gamma > 0 and at u -> 0 for gamma < 0.
  return Payoff([map](double u) { return map(u); }, true, map);
}

Payoff Payoff::custom(std::function<double(double)> fn, bool unbounded_above) {
  if (!fn) throw Error(ErrorCode::InvalidArgument, "payoff function is empty");
  return Payoff(std::move(fn), unbounded_above, std::nullopt);
}

std::vector<double> Payoff::evaluate(const DiscreteSample& sample) const {
  std::vector<double> out;
  out.reserve(sample.size());
  for (double u : sample.atoms()) {
    const double x = fn_(u);
    if (!std::isfinite(x)) throw Error(ErrorCode::Domain, "payoff is not finite at an atom");
    out.push_back(x);
  }
  return out;
}

}  // namespace orlicz
