// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#pragma once

#include <compare>
#include <limits>

#include "orlicz/error.hpp"

namespace orlicz {

/// A real number or +infinity. Divergences and their conjugates take +inf
/// outside their effective domain; the optimizers probe those regions and
/// must be able to see the blow-up without aborting.
class ExtendedValue {
 public:
  constexpr ExtendedValue(double v) : v_(v) {}  // NOLINT(implicit)

  static constexpr ExtendedValue infinity() {
    return ExtendedValue(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_finite() const { return v_ < std::numeric_limits<double>::infinity(); }
  constexpr bool is_infinite() const { return !is_finite(); }

  /// The finite value; throws a domain error on +inf.
  double value() const {
    if (!is_finite()) throw Error(ErrorCode::Domain, "extended value is +infinity");
    return v_;
  }

  /// Underlying double, +inf for the infinite value.
  constexpr double raw() const { return v_; }

  friend constexpr auto operator<=>(ExtendedValue a, ExtendedValue b) { return a.v_ <=> b.v_; }
  friend constexpr bool operator==(ExtendedValue a, ExtendedValue b) { return a.v_ == b.v_; }

 private:
  double v_;
};

}  // namespace orlicz
