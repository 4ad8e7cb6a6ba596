#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "bss/kernel.hpp"
#include "support/oracles.hpp"

using bss::Kernel;

TEST_CASE("kernel values") {
  CHECK(Kernel::gamma(-0.43, 1.0)(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(Kernel::power_law(0.25, -1.0)(1.0) == doctest::Approx(std::pow(2.0, -1.25)).epsilon(1e-15));
  CHECK(Kernel::scaled_power(-0.43, std::sqrt(0.14))(1.0) == doctest::Approx(std::sqrt(0.14)).epsilon(1e-15));
  CHECK(Kernel::gamma(-0.43, 1.0).slowly_varying(0.5) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
}

TEST_CASE("slowly varying factor tends to one at the origin") {
  for (const Kernel& k : {Kernel::gamma(-0.43, 1.0), Kernel::gamma(0.25, 3.0), Kernel::power_law(-0.2, -1.5)}) {
    for (double x : {1e-4, 5e-4, 9e-4}) CHECK(std::abs(k.slowly_varying(x) - 1.0) < 0.01);
  }
}

TEST_CASE("g equals x^alpha times the slowly varying factor") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  const Kernel ks[] = {Kernel::gamma(-0.43, 1.0), Kernel::power_law(0.25, -1.0), Kernel::scaled_power(0.1, 2.0)};
  for (const Kernel& k : ks) {
    for (int i = 0; i < 100; ++i) {
      const double x = u(rng);
      CHECK(k(x) == doctest::Approx(std::pow(x, k.alpha()) * k.slowly_varying(x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("kernel parameter validation") {
  CHECK_THROWS_AS(Kernel::gamma(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(Kernel::gamma(0.6, 1.0), std::domain_error);
  CHECK_THROWS_AS(Kernel::gamma(0.2, 0.0), std::domain_error);
  CHECK_THROWS_AS(Kernel::power_law(0.2, -0.4), std::domain_error);
  CHECK_THROWS_AS(Kernel::scaled_power(0.2, -1.0), std::domain_error);
  CHECK_THROWS_AS(Kernel::gamma(0.2, 1.0)(0.0), std::domain_error);
  CHECK_THROWS_AS(Kernel::gamma(0.2, 1.0).slowly_varying(1.5), std::domain_error);
  CHECK_THROWS_AS(bss::stationary_variance(Kernel::scaled_power(0.2, 1.0)), std::invalid_argument);
}

TEST_CASE("stationary variance of the gamma kernel has a closed form") {
  for (double alpha : {-0.43, -0.25, 0.25, 0.45}) {
    for (double lambda : {0.5, 1.0, 4.0}) {
      const double want = std::tgamma(2 * alpha + 1) / std::pow(2 * lambda, 2 * alpha + 1);
      CHECK(bss::stationary_variance(Kernel::gamma(alpha, lambda)) == doctest::Approx(want).epsilon(1e-10));
    }
  }
}

TEST_CASE("stationary variance of the power-law kernel matches quadrature") {
  const Kernel k = Kernel::power_law(0.25, -1.0);
  auto f = [&k](double x) { return k(x) * k(x); };
  const double head = oracle::de(f, 0.0, 1.0);
  // x = 1/t on the tail.
  const double tail = oracle::de([&](double t) { return f(1.0 / t) / (t * t); }, 0.0, 1.0);
  CHECK(bss::stationary_variance(k) == doctest::Approx(head + tail).epsilon(1e-10));
}

TEST_CASE("autocovariance") {
  const Kernel k = Kernel::gamma(-0.43, 1.0);
  const double var = bss::stationary_variance(k);
  CHECK(bss::autocovariance(k, 0.0) == var);

  const double h = 0.1;
  auto f = [&](double x) { return k(x) * k(x + h); };
  const double want = oracle::de(f, 0.0, h) + oracle::de(f, h, 1.0) +
                      oracle::de([&](double t) { return f(1.0 / t) / (t * t); }, 0.0, 1.0);
  const double got = bss::autocovariance(k, h);
  CHECK(got == doctest::Approx(want).epsilon(1e-8));
  CHECK(got < var);

  double prev = var;
  for (int i = 1; i <= 60; ++i) {
    const double c = bss::autocovariance(k, 0.05 * i);
    CHECK(c <= prev);
    prev = c;
  }
}

TEST_CASE("autocovariance matrix is positive semidefinite") {
  for (const Kernel& k : {Kernel::gamma(-0.43, 1.0), Kernel::gamma(0.25, 1.0), Kernel::power_law(-0.25, -1.0)}) {
    Eigen::MatrixXd c(64, 64);
    std::vector<double> acf(64);
    for (int i = 0; i < 64; ++i) acf[i] = bss::autocovariance(k, i / 64.0);
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j) c(i, j) = acf[std::abs(i - j)];
    const double min_eig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(c).eigenvalues().minCoeff();
    CHECK(min_eig >= -1e-8 * acf[0]);
  }
}

TEST_CASE("variogram asymptote") {
  const auto a = bss::variogram_asymptote(Kernel::gamma(-0.43, 1.0));
  CHECK(a.exponent == doctest::Approx(0.14));
  CHECK(a.constant > 1.0 / 0.14);
  for (double alpha : {-0.43, -0.25, 0.1, 0.25, 0.45}) {
    // Mandelbrot-Van Ness normalisation of fractional Brownian motion.
    const double want = std::tgamma(alpha + 1) * std::tgamma(alpha + 1) /
                        (std::tgamma(2 * alpha + 2) * std::sin(M_PI * (alpha + 0.5)));
    CHECK(bss::variogram_asymptote(Kernel::gamma(alpha, 1.0)).constant == doctest::Approx(want).epsilon(1e-10));
  }
  // Direct quadrature with the tail bound |(y+1)^a - y^a| <= |a| y^{a-1}.
  const double alpha = -0.25;
  auto f = [=](double y) {
    const double d = std::pow(y + 1, alpha) - std::pow(y, alpha);
    return d * d;
  };
  const double cut = 1e5;
  const double integral = oracle::de(f, 0.0, 1.0) + oracle::gk(f, 1.0, 100.0) + oracle::gk(f, 100.0, cut);
  const double tail_bound = alpha * alpha * std::pow(cut, 2 * alpha - 1) / (1 - 2 * alpha);
  const double got = bss::variogram_asymptote(Kernel::gamma(alpha, 1.0)).constant;
  CHECK(got >= 1 / (2 * alpha + 1) + integral - 1e-10);
  CHECK(got <= 1 / (2 * alpha + 1) + integral + tail_bound + 1e-10);
}

TEST_CASE("squared tail integral") {
  const Kernel k = Kernel::gamma(0.25, 1.0);
  const double full = bss::stationary_variance(k);
  const double head = oracle::de([&](double x) { return k(x) * k(x); }, 0.0, 2.0);
  CHECK(bss::squared_tail_integral(k, 2.0) == doctest::Approx(full - head).epsilon(1e-9));
}

TEST_CASE("kernel family names round trip") {
  for (auto f : {bss::KernelFamily::Gamma, bss::KernelFamily::PowerLaw, bss::KernelFamily::ScaledPower}) {
    CHECK(bss::parse_kernel_family(bss::to_string(f)) == f);
  }
  CHECK_THROWS_AS(bss::parse_kernel_family("cauchy"), std::invalid_argument);
}
