#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Core>

#include "bss/hybrid.hpp"
#include "bss/kernel.hpp"
#include "bss/random.hpp"

namespace bss {

/// Zero-mean Gaussian vector with a given covariance, sampled as L z with L
/// the lower Cholesky factor. If the factorisation fails from rounding, a
/// diagonal jitter eps * max(diag C) is added with eps escalating from 1e-14
/// to 1e-10; beyond that the covariance is rejected with NumericalError.
class CholeskySampler {
 public:
  explicit CholeskySampler(Eigen::MatrixXd covariance);

  std::size_t dimension() const { return static_cast<std::size_t>(factor_.rows()); }
  const Eigen::MatrixXd& covariance() const { return covariance_; }
  const Eigen::MatrixXd& factor() const { return factor_; }
  /// Relative jitter that was needed (0 when none).
  double jitter() const { return jitter_; }

  /// One draw; consumes dimension() normals from the stream.
  Eigen::VectorXd sample(NormalStream& normals) const;

 private:
  Eigen::MatrixXd covariance_;
  Eigen::MatrixXd factor_;
  double jitter_ = 0.0;
};

/// Grid for exact simulation: points i / n, i = 0..floor(n T).
struct ExactPlan {
  Kernel kernel;
  std::size_t n = 0;
  double horizon = 1.0;

  std::size_t points() const;
};

/// Largest grid the dense factorisation accepts.
inline constexpr std::size_t kMaxExactPoints = 8192;

/// Exact sampler for a stationary Gaussian BSS process (sigma = 1): covariance
/// C_ij = autocovariance(kernel, |i - j| / n).
class ExactBssSimulator {
 public:
  explicit ExactBssSimulator(const ExactPlan& plan);

  const ExactPlan& plan() const { return plan_; }
  const CholeskySampler& sampler() const { return sampler_; }
  Trajectory simulate(std::uint64_t seed) const;

 private:
  ExactPlan plan_;
  CholeskySampler sampler_;
};

Trajectory exact_bss(const ExactPlan& plan, std::uint64_t seed);

/// Cov(Y(s), Y(t)) for Y(t) = scale int_0^t (t - u)^alpha dW(u).
double power_tbss_covariance(double alpha, double scale, double s, double t);

/// Cov(Y(t), W(s)) for the same Y and its driving Brownian motion W.
double power_tbss_driver_covariance(double alpha, double scale, double t, double s);

/// Exact sampler for the power-kernel TBSS process on {i dt : i = 0..steps},
/// dt = horizon / steps. With `with_driver`, samples (W(t_1..t_m), Y(t_1..t_m))
/// jointly (W first), which is what pricing under rough volatility needs.
class ExactPowerTbss {
 public:
  ExactPowerTbss(double alpha, double scale, std::size_t steps, double horizon, bool with_driver = false);

  double alpha() const { return alpha_; }
  double scale() const { return scale_; }
  std::size_t steps() const { return steps_; }
  double dt() const { return dt_; }
  bool with_driver() const { return with_driver_; }
  const CholeskySampler& sampler() const { return sampler_; }

  /// Y on the grid including Y(0) = 0.
  Trajectory simulate(std::uint64_t seed) const;

 private:
  double alpha_;
  double scale_;
  std::size_t steps_;
  double dt_;
  bool with_driver_;
  CholeskySampler sampler_;
};

Trajectory exact_tbss_power(double alpha, double scale, std::size_t n, double horizon, std::uint64_t seed);

}  // namespace bss
