#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bss/rbergomi.hpp"
#include "support/oracles.hpp"

using namespace bss;

namespace {

RBergomiParams table_params(double maturity) {
  RBergomiParams p;
  p.maturity = maturity;
  return p;
}

}  // namespace

TEST_CASE("parameter validation") {
  RBergomiParams p = table_params(1.0);
  CHECK_NOTHROW(p.validate());
  p.alpha = -0.5;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p = table_params(1.0);
  p.rho = 1.5;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p = table_params(0.0);
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  CHECK(parse_pricing_scheme(to_string(PricingScheme::RiemannOpt)) == PricingScheme::RiemannOpt);
  CHECK_THROWS_AS(parse_pricing_scheme("nope"), std::invalid_argument);
}

TEST_CASE("vanishing vol-of-vol gives a lognormal price") {
  RBergomiParams p = table_params(1.0);
  p.eta = 1e-9;
  const auto s = simulate_terminal_prices(p, 50, 20000, PricingScheme::HybridK1, 3);
  std::vector<double> logs(s.size());
  std::transform(s.begin(), s.end(), logs.begin(), [](double x) { return std::log(x); });
  const auto m = oracle::moments(logs);
  CHECK(std::abs(m.mean + p.xi / 2) < 4 * std::sqrt(p.xi / 20000.0));
  CHECK(m.variance == doctest::Approx(p.xi).epsilon(0.03));
  const McEstimate atm = price_call(s, 1.0);
  CHECK(std::abs(atm.value - black_scholes_call(1.0, 1.0, 1.0, 0.235)) < 4 * atm.std_error);

  const auto anti = simulate_terminal_prices(p, 50, 20000, PricingScheme::HybridK1, 3, {.antithetic = true});
  for (std::size_t i = 0; i < 100; ++i) CHECK(std::log(s[i]) + std::log(anti[i]) == doctest::Approx(-p.xi).epsilon(1e-9));
}

TEST_CASE("discounted price is a martingale") {
  for (PricingScheme scheme : {PricingScheme::HybridK1, PricingScheme::Exact, PricingScheme::RiemannFwd}) {
    const auto s = simulate_terminal_prices(table_params(1.0), 100, 20000, scheme, 11);
    const McEstimate mean = price_call(s, 0.0);
    CHECK_MESSAGE(std::abs(mean.value - 1.0) < 4 * mean.std_error, to_string(scheme) << " mean " << mean.value);
  }
}

TEST_CASE("expected spot variance equals the forward variance") {
  const RBergomiParams p = table_params(1.0);
  const std::size_t steps = 100, paths = 20000;
  const auto v = simulate_variance_paths(p, steps, paths, PricingScheme::HybridK2, 21);
  REQUIRE(v.size() == paths * (steps + 1));
  for (std::size_t col : {std::size_t{0}, steps / 4, steps / 2, steps}) {
    std::vector<double> slice(paths);
    for (std::size_t i = 0; i < paths; ++i) slice[i] = v[i * (steps + 1) + col];
    const auto m = oracle::moments(slice);
    const double se = std::sqrt(m.variance / paths);
    if (col == 0) {
      CHECK(m.mean == doctest::Approx(p.xi).epsilon(1e-12));
    } else {
      CHECK_MESSAGE(std::abs(m.mean - p.xi) < 4 * se, "t index " << col << " mean " << m.mean);
    }
  }
}

TEST_CASE("call prices") {
  const auto s = simulate_terminal_prices(table_params(1.0), 100, 20000, PricingScheme::HybridK1, 5);
  const double mean = std::accumulate(s.begin(), s.end(), 0.0) / s.size();
  CHECK(price_call(s, 0.0).value == doctest::Approx(mean).epsilon(1e-12));
  CHECK(price_call(s, 1e6).value == 0.0);
  CHECK(price_call(s, 1e6).std_error == 0.0);
  double prev = 2.0;
  double prev_slope = -2.0;
  for (int i = 1; i <= 30; ++i) {
    const double k = 0.5 + 0.05 * i;
    const double c = price_call(s, k).value;
    CHECK(c <= prev);
    const double slope = (c - prev) / 0.05;
    if (i > 1) CHECK(slope >= prev_slope - 1e-12);
    prev_slope = slope;
    prev = c;
  }
  for (double x : s) CHECK(x > 0.0);
}

TEST_CASE("implied volatility") {
  for (double t : {0.041, 1.0}) {
    for (double k : t < 0.1 ? std::vector<double>{0.95, 0.98, 1.0, 1.02, 1.05} : std::vector<double>{0.6, 0.9, 1.0, 1.1, 1.5}) {
      const double price = black_scholes_call(1.0, k, t, 0.235);
      const ImpliedVol iv = implied_vol(price, 1.0, k, t);
      REQUIRE(iv.vol.has_value());
      CHECK(std::abs(*iv.vol - 0.235) < 1e-8);
    }
  }
  CHECK(implied_vol(0.09, 1.0, 0.9, 1.0).reason == ImpliedVolFailure::BelowIntrinsic);
  CHECK(!implied_vol(0.05, 1.0, 0.9, 1.0).vol.has_value());
  CHECK(implied_vol(1.0, 1.0, 0.9, 1.0).reason == ImpliedVolFailure::AboveSpot);
  const double vega = black_scholes_vega(1.0, 1.1, 0.5, 0.3);
  const double bump = (black_scholes_call(1.0, 1.1, 0.5, 0.3 + 1e-6) - black_scholes_call(1.0, 1.1, 0.5, 0.3 - 1e-6)) / 2e-6;
  CHECK(vega == doctest::Approx(bump).epsilon(1e-6));
}

TEST_CASE("negative correlation skews the smile downward") {
  const std::vector<double> ks{-0.1, 0.0, 0.1};
  const auto rows = smile(table_params(1.0), 100, 20000, PricingScheme::HybridK1, ks, 8);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    REQUIRE(r.implied_vol.has_value());
    CHECK(r.iv_stderr.has_value());
    CHECK(r.strike == doctest::Approx(std::exp(r.log_strike)));
  }
  CHECK(*rows[0].implied_vol > *rows[1].implied_vol);
  CHECK(*rows[1].implied_vol > *rows[2].implied_vol);
}

TEST_CASE("default strike grids") {
  const auto short_grid = default_log_strikes(0.041);
  const auto long_grid = default_log_strikes(1.0);
  CHECK(short_grid.size() == 25);
  CHECK(short_grid.front() == doctest::Approx(-0.05));
  CHECK(short_grid.back() == doctest::Approx(0.03));
  CHECK(long_grid.front() == doctest::Approx(-0.4));
  CHECK(long_grid.back() == doctest::Approx(0.2));
}

TEST_CASE("simulation is deterministic for a fixed seed") {
  const RBergomiParams p = table_params(0.5);
  for (PricingScheme scheme : {PricingScheme::HybridK2, PricingScheme::Exact}) {
    const auto a = simulate_terminal_prices(p, 40, 300, scheme, 99);
    const auto b = simulate_terminal_prices(p, 40, 300, scheme, 99);
    const auto c = simulate_terminal_prices(p, 40, 300, scheme, 100);
    CHECK(a == b);
    CHECK(a != c);
    const auto head = simulate_terminal_prices(p, 40, 130, scheme, 99);
    CHECK(std::equal(head.begin(), head.end(), a.begin()));
  }
}
