#include <doctest.h>

#include <cmath>
#include <random>

#include "bss/errors.hpp"
#include "bss/exact.hpp"
#include "support/oracles.hpp"

using namespace bss;

TEST_CASE("exact BSS covariance") {
  const Kernel g = Kernel::gamma(-0.43, 1.0);
  const ExactBssSimulator sim(ExactPlan{g, 16, 0.25});
  REQUIRE(sim.plan().points() == 5);
  const Eigen::MatrixXd& c = sim.sampler().covariance();
  const Eigen::MatrixXd& l = sim.sampler().factor();
  CHECK((l * l.transpose() - c).cwiseAbs().maxCoeff() <= 1e-10 * c.cwiseAbs().maxCoeff());

  const std::size_t paths = 100000;
  std::vector<double> lag[3];
  for (auto& v : lag) v.resize(paths);
  std::vector<double> pooled;
  pooled.reserve(paths);
  const double var = stationary_variance(g);
  for (std::size_t p = 0; p < paths; ++p) {
    const auto x = sim.simulate(derive_seed(1, p)).values;
    for (int h = 0; h < 3; ++h) lag[h][p] = x[1] * x[1 + h];
    pooled.push_back(x[0] / std::sqrt(var));
  }
  for (int h = 0; h < 3; ++h) {
    const auto m = oracle::moments(lag[h]);
    const double want = autocovariance(g, h / 16.0);
    CHECK_MESSAGE(std::abs(m.mean - want) < (h == 0 ? 3.0 : 4.0) * std::sqrt(m.variance / paths), "lag " << h);
  }
  const auto m = oracle::moments(pooled);
  CHECK(std::abs(m.skewness) < 4.0 * std::sqrt(6.0 / paths));
  CHECK(std::abs(m.excess_kurtosis) < 4.0 * std::sqrt(24.0 / paths));
}

TEST_CASE("exact BSS determinism and guard") {
  const ExactPlan plan{Kernel::gamma(0.25, 1.0), 32, 1.0};
  CHECK(exact_bss(plan, 4).values == exact_bss(plan, 4).values);
  CHECK(exact_bss(plan, 4).values != exact_bss(plan, 5).values);
  CHECK(exact_bss(plan, 4).label == TrajectoryLabel::Exact);
  CHECK_THROWS_AS(exact_bss(ExactPlan{Kernel::gamma(0.25, 1.0), 10000, 1.0}, 1), std::invalid_argument);
  CHECK_THROWS(exact_bss(ExactPlan{Kernel::scaled_power(0.25, 1.0), 10, 1.0}, 1));
}

TEST_CASE("power kernel covariance") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (double alpha : {-0.43, 0.25}) {
    const double scale = std::sqrt(2 * alpha + 1);
    CHECK(power_tbss_covariance(alpha, scale, 0.7, 0.7) == doctest::Approx(std::pow(0.7, 2 * alpha + 1)).epsilon(1e-13));
    CHECK(power_tbss_covariance(alpha, scale, 0.0, 0.7) == 0.0);
    for (int i = 0; i < 20; ++i) {
      double s = u(rng), t = u(rng);
      if (s > t) std::swap(s, t);
      const double want = oracle::power_covariance(alpha, scale, s, t);
      CHECK_MESSAGE(power_tbss_covariance(alpha, scale, s, t) == doctest::Approx(want).epsilon(1e-9),
                    "s=" << s << " t=" << t);
      CHECK(power_tbss_covariance(alpha, scale, t, s) == doctest::Approx(want).epsilon(1e-9));
      const double driver = scale * oracle::de([&](double w) { return std::pow(w, alpha); }, t - s, t);
      CHECK(power_tbss_driver_covariance(alpha, scale, t, s) == doctest::Approx(driver).epsilon(1e-9));
    }
  }
}

TEST_CASE("exact power TBSS paths") {
  const double alpha = -0.43;
  const double scale = std::sqrt(2 * alpha + 1);
  const ExactPowerTbss sim(alpha, scale, 8, 1.0);
  const auto& c = sim.sampler().covariance();
  const auto& l = sim.sampler().factor();
  CHECK((l * l.transpose() - c).cwiseAbs().maxCoeff() <= 1e-10 * c.cwiseAbs().maxCoeff());

  const std::size_t paths = 100000;
  std::vector<double> last(paths);
  for (std::size_t p = 0; p < paths; ++p) {
    const auto y = sim.simulate(derive_seed(2, p)).values;
    REQUIRE(y.size() == 9);
    CHECK(y[0] == 0.0);
    last[p] = y.back();
  }
  const auto m = oracle::moments(last);
  CHECK(std::abs(m.variance - 1.0) < 4.0 * std::sqrt(2.0 / paths));
  CHECK(std::abs(m.skewness) < 4.0 * std::sqrt(6.0 / paths));
  CHECK(std::abs(m.excess_kurtosis) < 4.0 * std::sqrt(24.0 / paths));

  const Trajectory t = exact_tbss_power(alpha, scale, 50, 1.0, 3);
  CHECK(t.values.size() == 51);
  CHECK(t.dt == doctest::Approx(0.02));
}

TEST_CASE("joint driver sampling") {
  const double alpha = -0.3;
  const ExactPowerTbss sim(alpha, 1.0, 6, 0.5, true);
  REQUIRE(sim.sampler().dimension() == 12);
  const auto& c = sim.sampler().covariance();
  const double dt = 0.5 / 6;
  // W block first, then Y.
  CHECK(c(2, 4) == doctest::Approx(3 * dt));
  CHECK(c(6 + 2, 6 + 2) == doctest::Approx(std::pow(3 * dt, 2 * alpha + 1) / (2 * alpha + 1)));
  CHECK(c(6 + 4, 1) == doctest::Approx(power_tbss_driver_covariance(alpha, 1.0, 5 * dt, 2 * dt)));
}

TEST_CASE("Cholesky jitter") {
  Eigen::MatrixXd rank_one(3, 3);
  rank_one << 1, 1, 1, 1, 1, 1, 1, 1, 1;
  const CholeskySampler ok(rank_one);
  CHECK(ok.jitter() > 0.0);
  CHECK(ok.jitter() <= 1e-10);

  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  CHECK_THROWS_AS(CholeskySampler{indefinite}, NumericalError);

  Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(4, 4);
  CHECK(CholeskySampler(identity).jitter() == 0.0);
}
