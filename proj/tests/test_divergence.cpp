// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "orlicz/divergence.hpp"
#include "orlicz/error.hpp"

using namespace orlicz;
using Catch::Approx;

namespace {

std::vector<DivergenceSpec> all_specs(double eps = 1.0) {
  return {DivergenceSpec::kullback_leibler(eps), DivergenceSpec::alpha_divergence(0.5, eps),
          DivergenceSpec::alpha_divergence(1.5, eps), DivergenceSpec::alpha_divergence(3.0, eps),
          DivergenceSpec::alpha_divergence(0.25, eps)};
}

// A finite-domain probe grid for g: below the alpha < 1 bound.
std::vector<double> probe_grid(const DivergenceSpec& s) {
  std::vector<double> ys;
  const double top = std::min(3.0, 0.95 * s.conjugate_domain_bound());
  for (int i = 0; i <= 60; ++i) ys.push_back(-5.0 + (top + 5.0) * i / 60.0);
  return ys;
}

bool is_kl(const DivergenceSpec& s) { return s.kind() == DivergenceKind::KullbackLeibler; }

}  // namespace

TEST_CASE("spec construction validates epsilon and alpha", "[divergence]") {
  CHECK_THROWS_AS(DivergenceSpec::kullback_leibler(0.0), Error);
  CHECK_THROWS_AS(DivergenceSpec::kullback_leibler(-1.0), Error);
  CHECK_THROWS_AS(DivergenceSpec::kullback_leibler(NAN), Error);
  CHECK_THROWS_AS(DivergenceSpec::alpha_divergence(1.0, 0.1), Error);
  CHECK_THROWS_AS(DivergenceSpec::alpha_divergence(0.0, 0.1), Error);
  CHECK_THROWS_AS(DivergenceSpec::alpha_divergence(-2.0, 0.1), Error);
  try {
    DivergenceSpec::alpha_divergence(1.0, 0.1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  CHECK(DivergenceSpec::alpha_divergence(0.5, 1.0).conjugate_domain_bound() == Approx(1.0));
  CHECK(std::isinf(DivergenceSpec::kullback_leibler(1.0).conjugate_domain_bound()));
}

TEST_CASE("extended value ordering", "[divergence]") {
  const ExtendedValue inf = ExtendedValue::infinity();
  CHECK(inf > ExtendedValue(1e300));
  CHECK(ExtendedValue(2.0) < inf);
  CHECK(inf == ExtendedValue::infinity());
  CHECK_THROWS_AS(inf.value(), Error);
  CHECK(ExtendedValue(3.5).value() == 3.5);
}

TEST_CASE("f examples", "[divergence]") {
  const auto kl = DivergenceSpec::kullback_leibler(1.0);
  CHECK(f_value(kl, 1.0).value() == 0.0);
  CHECK(f_value(kl, 0.0).value() == 1.0);
  CHECK(f_value(kl, 2.0).value() == Approx(2.0 * std::log(2.0) - 1.0).epsilon(1e-12));
  for (const auto& s : all_specs()) {
    CHECK(f_value(s, -0.5).is_infinite());
    CHECK(f_value(s, 1.0).value() == 0.0);
  }
}

TEST_CASE("g examples", "[divergence]") {
  const auto kl = DivergenceSpec::kullback_leibler(1.0);
  const auto a15 = DivergenceSpec::alpha_divergence(1.5, 1.0);
  const auto a05 = DivergenceSpec::alpha_divergence(0.5, 1.0);
  CHECK(g_value(a15, -3.0).value() == -1.0);
  CHECK(g_value(a15, -10.0).value() == -1.0);
  CHECK(g_value(kl, 0.0).value() == 0.0);
  CHECK(g_value(a05, 0.5).value() == Approx(1.0).epsilon(1e-14));
  CHECK(g_value(a05, 1.0).is_infinite());
  CHECK(g_value(a05, 2.0).is_infinite());
  CHECK(g_value(kl, 800.0).is_infinite());
}

TEST_CASE("g_eps examples", "[divergence]") {
  CHECK(g_eps_value(DivergenceSpec::kullback_leibler(2.0), 0.0).value() == 0.0);
  CHECK(g_eps_value(DivergenceSpec::alpha_divergence(0.5, 0.5), 2.0).is_infinite());
  CHECK(g_eps_value(DivergenceSpec::alpha_divergence(0.5, 0.5), 1.99).is_finite());
  CHECK(g_eps_value(DivergenceSpec::kullback_leibler(1.0), 1.0).value() ==
        Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  for (const auto& s : all_specs(1.0)) {
    for (double y : probe_grid(s)) CHECK(g_eps_value(s, y).raw() == g_value(s, y).raw());
  }
}

TEST_CASE("g_prime examples and finite differences", "[divergence]") {
  const auto kl = DivergenceSpec::kullback_leibler(1.0);
  const auto a15 = DivergenceSpec::alpha_divergence(1.5, 1.0);
  CHECK(g_prime(kl, 0.0) == 1.0);
  CHECK(g_prime(a15, 0.0) == 1.0);
  CHECK(g_prime(a15, -3.0) == 0.0);
  CHECK(g_prime(a15, -7.0) == 0.0);
  CHECK_THROWS_AS(g_prime(DivergenceSpec::alpha_divergence(0.5, 1.0), 1.0), Error);

  for (const auto& s : all_specs()) {
    for (double y : probe_grid(s)) {
      if (s.kind() == DivergenceKind::Alpha && s.alpha() > 1.0 &&
          std::abs(y + s.alpha() / (s.alpha() - 1.0)) < 1e-3) {
        continue;  // kink of the plus-part
      }
      const double h = 1e-6 * std::max(1.0, std::abs(y));
      const double fd = (g_value(s, y + h).value() - g_value(s, y - h).value()) / (2.0 * h);
      CHECK(g_prime(s, y) == Approx(fd).epsilon(1e-6).margin(1e-9));
    }
  }
}

TEST_CASE("h_eps examples and inverse property", "[divergence]") {
  CHECK(h_eps(DivergenceSpec::kullback_leibler(1.0), 0.0) == 1.0);
  CHECK(h_eps(DivergenceSpec::alpha_divergence(1.5, 1.0), 0.0) == 1.0);
  CHECK(h_eps(DivergenceSpec::alpha_divergence(1.5, 1.0), 3.0) == Approx(4.0).epsilon(1e-14));
  CHECK(h_eps(DivergenceSpec::alpha_divergence(1.5, 1.0), -5.0) == 0.0);
  CHECK_THROWS_AS(h_eps(DivergenceSpec::alpha_divergence(0.5, 1.0), 1.0), Error);

  // f'_eps(h_eps(y)) = y wherever h_eps(y) > 0, with f'_eps by finite differences.
  for (const auto& s : all_specs(0.3)) {
    for (double y : {-2.0, -0.5, 0.0, 0.7, 1.5}) {
      if (s.has_bounded_conjugate_domain() && y >= 0.95 * s.conjugate_domain_bound() / 0.3) continue;
      const double z = h_eps(s, y);
      if (!(z > 1e-6)) continue;
      const double h = 1e-6 * z;
      const double fd =
          (f_value(s, z + h).value() - f_value(s, z - h).value()) / (2.0 * h) / s.epsilon();
      CHECK(fd == Approx(y).margin(1e-6));
    }
  }
}

TEST_CASE("conjugacy against an independent numeric transform", "[divergence]") {
  for (const auto& s : all_specs()) {
    const bool kl = is_kl(s);
    for (double y : probe_grid(s)) {
      const double g = g_value(s, y).value();
      CHECK(g == Approx(oracle::conjugate_numeric(kl, s.alpha(), y)).epsilon(1e-6).margin(1e-6));
      // Fenchel-Young on a dense grid, with equality at x = g'(y).
      for (int i = 0; i <= 400; ++i) {
        const double x = 8.0 * i / 400.0;
        CHECK(g >= x * y - f_value(s, x).value() - 1e-12);
      }
      const double xs = g_prime(s, y);
      CHECK(g == Approx(xs * y - f_value(s, xs).value()).margin(1e-6));
    }
  }
}

TEST_CASE("g inequalities and monotonicity", "[divergence]") {
  for (const auto& s : all_specs()) {
    double prev = -HUGE_VAL;
    for (double y : probe_grid(s)) {
      const double g = g_value(s, y).value();
      CHECK(g >= y - 1e-12);
      CHECK(g >= prev);
      if (y >= 0.0) CHECK(g >= 0.0);
      prev = g;
    }
  }
}

TEST_CASE("alpha to one limit approaches KL", "[divergence]") {
  const auto kl = DivergenceSpec::kullback_leibler(1.0);
  // The gap closes linearly in |alpha - 1|.
  for (double y : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
    const double ref = g_value(kl, y).value();
    for (double sign : {-1.0, 1.0}) {
      auto gap = [&](double d) {
        return std::abs(g_value(DivergenceSpec::alpha_divergence(1.0 + sign * d, 1.0), y).value() - ref);
      };
      CHECK(gap(1e-5) <= 1e-3 * (1.0 + std::abs(ref)));
      if (gap(1e-3) > 1e-12) CHECK(gap(1e-4) < 0.2 * gap(1e-3));
    }
  }
}

TEST_CASE("conjugate_terms agrees with the scalar functions", "[divergence]") {
  for (const auto& s : all_specs()) {
    for (double y : probe_grid(s)) {
      ConjugateTerms t{};
      REQUIRE(conjugate_terms(s, y, t));
      const double g = g_value(s, y).value();
      const double gp = g_prime(s, y);
      CHECK(t.g == Approx(g).epsilon(1e-12).margin(1e-14));
      CHECK(t.g_prime_minus_one == Approx(gp - 1.0).epsilon(1e-12).margin(1e-14));
      CHECK(t.g_minus_y_gprime == Approx(g - y * gp).epsilon(1e-10).margin(1e-12));
    }
  }
  ConjugateTerms t{};
  CHECK_FALSE(conjugate_terms(DivergenceSpec::alpha_divergence(0.5, 1.0), 1.0, t));
}
