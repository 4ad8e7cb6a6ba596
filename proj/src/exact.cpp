#include "bss/exact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "bss/errors.hpp"
#include "bss/specfun.hpp"

namespace bss {

CholeskySampler::CholeskySampler(Eigen::MatrixXd covariance) : covariance_(std::move(covariance)) {
  if (covariance_.rows() != covariance_.cols() || covariance_.rows() == 0) {
    throw std::invalid_argument("CholeskySampler: covariance must be square and non-empty");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(covariance_);
  if (llt.info() == Eigen::Success) {
    factor_ = llt.matrixL();
    return;
  }
  const double diag_max = covariance_.diagonal().maxCoeff();
  for (double eps = 1e-14; eps <= 1e-10 * 1.000001; eps *= 10.0) {
    Eigen::MatrixXd jittered = covariance_;
    jittered.diagonal().array() += eps * diag_max;
    llt.compute(jittered);
    if (llt.info() == Eigen::Success) {
      factor_ = llt.matrixL();
      jitter_ = eps;
      return;
    }
  }
  std::ostringstream os;
  os << "Cholesky factorisation failed after jitter escalation up to 1e-10 (dimension "
     << covariance_.rows() << ")";
  throw NumericalError(os.str());
}

Eigen::VectorXd CholeskySampler::sample(NormalStream& normals) const {
  Eigen::VectorXd z(factor_.rows());
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = normals();
  return factor_.triangularView<Eigen::Lower>() * z;
}

std::size_t ExactPlan::points() const {
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * horizon + 1e-9)) + 1;
}

namespace {

CholeskySampler build_bss_sampler(const ExactPlan& plan) {
  if (!plan.kernel.square_integrable()) {
    throw std::invalid_argument("exact BSS: kernel must be square integrable");
  }
  if (plan.n == 0 || !(plan.horizon > 0.0)) throw std::invalid_argument("exact BSS: invalid grid");
  const std::size_t m = plan.points();
  if (m > kMaxExactPoints) {
    throw std::invalid_argument("exact BSS: grid of " + std::to_string(m) +
                                " points exceeds the dense factorisation limit");
  }
  std::vector<double> acf(m);
  for (std::size_t h = 0; h < m; ++h) {
    acf[h] = autocovariance(plan.kernel, static_cast<double>(h) / static_cast<double>(plan.n));
  }
  const auto M = static_cast<Eigen::Index>(m);
  Eigen::MatrixXd c(M, M);
  for (Eigen::Index i = 0; i < M; ++i) {
    for (Eigen::Index j = 0; j < M; ++j) c(i, j) = acf[static_cast<std::size_t>(std::abs(i - j))];
  }
  return CholeskySampler(std::move(c));
}

}  // namespace

ExactBssSimulator::ExactBssSimulator(const ExactPlan& plan) : plan_(plan), sampler_(build_bss_sampler(plan)) {}

Trajectory ExactBssSimulator::simulate(std::uint64_t seed) const {
  NormalStream normals(seed);
  const Eigen::VectorXd x = sampler_.sample(normals);
  Trajectory path;
  path.values.assign(x.data(), x.data() + x.size());
  path.dt = 1.0 / static_cast<double>(plan_.n);
  path.seed = seed;
  path.label = TrajectoryLabel::Exact;
  return path;
}

Trajectory exact_bss(const ExactPlan& plan, std::uint64_t seed) {
  return ExactBssSimulator(plan).simulate(seed);
}

double power_tbss_covariance(double alpha, double scale, double s, double t) {
  require_roughness_index(alpha);
  if (s > t) std::swap(s, t);
  if (!(s >= 0.0)) throw std::domain_error("power_tbss_covariance: times must be non-negative");
  if (s == 0.0) return 0.0;
  const double a1 = alpha + 1.0;
  if (s == t) return scale * scale * std::pow(t, 2.0 * alpha + 1.0) / (2.0 * alpha + 1.0);
  // int_0^s (s-u)^a (t-u)^a du = s^{a+1} t^a / (a+1) 2F1(-a, 1; a+2; s/t)
  return scale * scale * std::pow(s, a1) * std::pow(t, alpha) / a1 * specfun::hyp2f1_special(alpha, s / t);
}

double power_tbss_driver_covariance(double alpha, double scale, double t, double s) {
  require_roughness_index(alpha);
  const double u = std::min(s, t);
  if (!(u >= 0.0)) throw std::domain_error("power_tbss_driver_covariance: times must be non-negative");
  const double a1 = alpha + 1.0;
  return scale * (std::pow(t, a1) - std::pow(t - u, a1)) / a1;
}

namespace {

CholeskySampler build_power_sampler(double alpha, double scale, std::size_t steps, double dt, bool with_driver) {
  require_roughness_index(alpha);
  if (steps == 0 || !(dt > 0.0)) throw std::invalid_argument("exact TBSS: invalid grid");
  const std::size_t dim = with_driver ? 2 * steps : steps;
  if (dim > kMaxExactPoints) throw std::invalid_argument("exact TBSS: grid exceeds the dense factorisation limit");
  const auto m = static_cast<Eigen::Index>(steps);
  auto time = [dt](Eigen::Index i) { return static_cast<double>(i + 1) * dt; };

  Eigen::MatrixXd c(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const Eigen::Index y0 = with_driver ? m : 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = power_tbss_covariance(alpha, scale, time(i), time(j));
      c(y0 + i, y0 + j) = v;
      c(y0 + j, y0 + i) = v;
    }
  }
  if (with_driver) {
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        c(i, j) = std::min(time(i), time(j));
        const double v = power_tbss_driver_covariance(alpha, scale, time(i), time(j));
        c(m + i, j) = v;
        c(j, m + i) = v;
      }
    }
  }
  return CholeskySampler(std::move(c));
}

}  // namespace

ExactPowerTbss::ExactPowerTbss(double alpha, double scale, std::size_t steps, double horizon, bool with_driver)
    : alpha_(alpha),
      scale_(scale),
      steps_(steps),
      dt_(steps == 0 ? 0.0 : horizon / static_cast<double>(steps)),
      with_driver_(with_driver),
      sampler_(build_power_sampler(alpha, scale, steps, dt_, with_driver)) {
  if (!(horizon > 0.0)) throw std::invalid_argument("exact TBSS: horizon must be positive");
}

Trajectory ExactPowerTbss::simulate(std::uint64_t seed) const {
  NormalStream normals(seed);
  const Eigen::VectorXd x = sampler_.sample(normals);
  const Eigen::Index y0 = with_driver_ ? static_cast<Eigen::Index>(steps_) : 0;
  Trajectory path;
  path.values.resize(steps_ + 1);
  path.values[0] = 0.0;
  for (std::size_t i = 0; i < steps_; ++i) path.values[i + 1] = x(y0 + static_cast<Eigen::Index>(i));
  path.dt = dt_;
  path.seed = seed;
  path.label = TrajectoryLabel::Exact;
  return path;
}

Trajectory exact_tbss_power(double alpha, double scale, std::size_t n, double horizon, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("exact TBSS: n must be positive");
  const auto steps = static_cast<std::size_t>(std::floor(static_cast<double>(n) * horizon + 1e-9));
  return ExactPowerTbss(alpha, scale, steps, static_cast<double>(steps) / static_cast<double>(n)).simulate(seed);
}

}  // namespace bss
