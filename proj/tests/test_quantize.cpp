// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include <catch_amalgamated.hpp>

#include <cmath>

#include "orlicz/error.hpp"
#include "orlicz/quantize.hpp"

using namespace orlicz;
using Catch::Approx;

namespace {
const GammaParams kTN{4.60, 0.142};
const GammaParams kTP{0.801, 0.0541};
}  // namespace

TEST_CASE("two-atom exponential sample", "[quantize]") {
  const DiscreteSample s = quantize({1.0, 1.0}, 1);
  REQUIRE(s.size() == 2);
  CHECK(s.atoms()[0] == Approx(-std::log(0.75)).epsilon(1e-12));
  CHECK(s.atoms()[1] == Approx(-std::log(0.25)).epsilon(1e-12));
  CHECK(s.weight() == 0.5);
  CHECK(s.exponent().value() == 1);
  const double m = expect(s, [](double u) { return ExtendedValue(u); }).value();
  CHECK(m == Approx(0.836988).epsilon(1e-6));
}

TEST_CASE("atoms sit at odd quantiles", "[quantize]") {
  for (const auto& p : {kTN, kTP}) {
    const DiscreteSample s = quantize(p, 3);
    REQUIRE(s.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(std::abs(gamma_cdf(p, s.atoms()[i]) - (2.0 * i + 1.0) / 16.0) <= 1e-10);
      if (i > 0) CHECK(s.atoms()[i] > s.atoms()[i - 1]);
    }
  }
  const DiscreteSample big = quantize(kTN, 10);
  for (std::size_t i = 0; i < big.size(); ++i) {
    CHECK(std::abs(gamma_cdf(kTN, big.atoms()[i]) - (2.0 * i + 1.0) / 2048.0) <= 1e-10);
  }
  CHECK_THROWS_AS(quantize(kTN, 0), Error);
  CHECK_THROWS_AS(quantize(kTN, 31), Error);
}

TEST_CASE("expectations on the default discretization", "[quantize]") {
  const DiscreteSample s = quantize(kTN);
  REQUIRE(s.size() == 8192);
  CHECK(expect(s, [](double) { return ExtendedValue(1.0); }).value() == Approx(1.0).epsilon(1e-15));
  const double mean = expect(s, [](double u) { return ExtendedValue(u); }).value();
  CHECK(std::abs(mean - 4.60 * 0.142) < 2e-4);
  const double below = expect(s, [](double u) { return ExtendedValue(u <= 1.0 ? 1.0 : 0.0); }).value();
  CHECK(std::abs(below - gamma_cdf(kTN, 1.0)) <= 2.0 / 8192);
  CHECK(expect(s, [](double u) {
          return u > 2.0 ? ExtendedValue::infinity() : ExtendedValue(u);
        }).is_infinite());
}

TEST_CASE("expect is linear and monotone", "[quantize]") {
  const DiscreteSample s = quantize(kTP, 6);
  auto e = [&](auto fn) { return expect(s, [&](double u) { return ExtendedValue(fn(u)); }).value(); };
  const double a = e([](double u) { return u * u; });
  const double b = e([](double u) { return std::sqrt(u); });
  CHECK(e([](double u) { return 2.0 * u * u - 3.0 * std::sqrt(u); }) == Approx(2.0 * a - 3.0 * b));
  CHECK(e([](double u) { return std::sqrt(u) + 0.01; }) >= b);
}

TEST_CASE("from_atoms validation", "[quantize]") {
  const DiscreteSample s = DiscreteSample::from_atoms({0.1, 0.5, 2.0});
  CHECK(s.size() == 3);
  CHECK_FALSE(s.source().has_value());
  CHECK_THROWS_AS(DiscreteSample::from_atoms({}), Error);
  CHECK_THROWS_AS(DiscreteSample::from_atoms({0.5, 0.5}), Error);
  CHECK_THROWS_AS(DiscreteSample::from_atoms({0.5, 0.1}), Error);
  CHECK_THROWS_AS(DiscreteSample::from_atoms({-0.5, 0.1}), Error);
}

TEST_CASE("sup-norm discretization error", "[quantize]") {
  const DiscreteSample two = quantize({1.0, 1.0}, 1);
  const double e2 = discretization_sup_error(two);
  CHECK(e2 <= 0.5);
  CHECK(e2 >= 0.25 - 1e-8);  // just below the first atom: F = 1/4, F_N = 0
  for (const auto& p : {kTN, kTP}) {
    double prev = 1.0;
    for (int m : {2, 4, 6, 8, 10}) {
      const double err = discretization_sup_error(quantize(p, m));
      CHECK(err <= 1.0 / std::ldexp(1.0, m));
      CHECK(err <= prev);
      prev = err;
    }
  }
}
