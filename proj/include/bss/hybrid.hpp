#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "bss/convolution.hpp"
#include "bss/kernel.hpp"
#include "bss/random.hpp"

namespace bss {

/// Evaluation points b_k used for the step-function part of the scheme.
enum class EvaluationRule {
  Forward,  ///< b_k = k, i.e. Ito forward Riemann sums
  Optimal,  ///< b_k = ((k^{a+1} - (k-1)^{a+1}) / (a+1))^{1/a}, the MSE minimiser
};

std::string_view to_string(EvaluationRule rule);
EvaluationRule parse_evaluation_rule(std::string_view name);

/// b_k for cell k >= 1 (cell k covers lags [(k-1) dt, k dt]).
/// Always lies in [k-1, k] \ {0}.
double evaluation_point(EvaluationRule rule, double alpha, std::size_t k);

/// Row-major (cells x (kappa+1)) block of Gaussian innovations; row i holds
/// (W_i, W_{i,1}, ..., W_{i,kappa}) for one grid cell.
using InnovationMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Covariance of one innovation vector (W_i, W_{i,1}, ..., W_{i,kappa}) and
/// its lower Cholesky factor. Entries are homogeneous in the step, so any
/// step dt > 0 is admitted (dt = 1/n on the unit-rate grid).
class InnovationCovariance {
 public:
  InnovationCovariance(double alpha, double dt, std::size_t kappa);

  double alpha() const { return alpha_; }
  double dt() const { return dt_; }
  std::size_t kappa() const { return kappa_; }
  std::size_t dimension() const { return kappa_ + 1; }
  const Eigen::MatrixXd& matrix() const { return sigma_; }
  const Eigen::MatrixXd& cholesky() const { return chol_; }

 private:
  double alpha_;
  double dt_;
  std::size_t kappa_;
  Eigen::MatrixXd sigma_;
  Eigen::MatrixXd chol_;
};

/// Convenience for the unit-rate grid, dt = 1/n.
InnovationCovariance innovation_covariance(double alpha, std::size_t n, std::size_t kappa);

/// `count` i.i.d. rows distributed N(0, Sigma), drawn as chol * z with z
/// standard normal, row by row. Deterministic given the seed.
InnovationMatrix sample_innovations(const InnovationCovariance& cov, std::size_t count,
                                    std::uint64_t seed);
InnovationMatrix sample_innovations(const InnovationCovariance& cov, std::size_t count,
                                    NormalStream& normals);

/// Discretisation parameters of the hybrid scheme.
///
/// The grid is {0, dt, ..., steps * dt}. For the stationary (BSS) process the
/// step-function part is truncated after `truncation` cells (N_n); for the
/// truncated (TBSS) process the integral starts at 0 and `truncation` is not
/// used.
struct HybridPlan {
  Kernel kernel;
  std::size_t kappa = 1;
  EvaluationRule rule = EvaluationRule::Optimal;
  double dt = 0.0;
  std::size_t steps = 0;
  std::size_t truncation = 0;
  double truncation_exponent = 0.5;
  ConvolutionMethod convolution = ConvolutionMethod::Automatic;

  /// Unit-rate grid for X on [0, T]: dt = 1/n, steps = floor(n T),
  /// truncation N_n = floor(n^{1 + gamma}).
  static HybridPlan bss(const Kernel& kernel, std::size_t n, double horizon, std::size_t kappa,
                        EvaluationRule rule, double truncation_exponent = 0.5);

  /// Grid for Y on [0, horizon] with `steps` cells of size horizon / steps.
  static HybridPlan tbss(const Kernel& kernel, std::size_t steps, double horizon, std::size_t kappa,
                         EvaluationRule rule);

  /// Grid resolution 1/dt.
  double resolution() const { return 1.0 / dt; }
};

enum class TrajectoryLabel { BSS, TBSS, Exact };
std::string_view to_string(TrajectoryLabel label);

/// Equidistant samples values[i] = X(t0 + i dt).
struct Trajectory {
  std::vector<double> values;
  double t0 = 0.0;
  double dt = 0.0;
  std::uint64_t seed = 0;
  TrajectoryLabel label = TrajectoryLabel::BSS;
};

/// Volatility input sigma^n_i: either the constant 1 (empty span) or one value
/// per innovation row.
using VolatilityPath = std::span<const double>;

/// Reusable hybrid-scheme simulator for one plan. Precomputes the
/// innovation covariance, the step-function coefficients and their FFT.
/// Immutable after construction; `simulate*` may be called concurrently.
class HybridSimulator {
 public:
  enum class Mode { Stationary, Truncated };

  HybridSimulator(HybridPlan plan, Mode mode);

  const HybridPlan& plan() const { return plan_; }
  Mode mode() const { return mode_; }
  const InnovationCovariance& covariance() const { return cov_; }

  /// Number of innovation rows a path consumes: truncation + steps for the
  /// stationary process, steps for the truncated one.
  std::size_t innovation_rows() const;

  /// Step-function coefficients Gamma_k, k = 0..; zero for k <= kappa.
  const std::vector<double>& step_coefficients() const { return gamma_; }

  /// Path values at grid points 0..steps from given innovations and
  /// volatility. Row r of `innovations` is cell index r - truncation
  /// (stationary) or r (truncated).
  std::vector<double> synthesize(const InnovationMatrix& innovations, VolatilityPath sigma = {}) const;

  /// Draws innovations from `seed` and synthesizes one trajectory.
  Trajectory simulate(std::uint64_t seed, VolatilityPath sigma = {}) const;

 private:
  HybridPlan plan_;
  Mode mode_;
  InnovationCovariance cov_;
  std::vector<double> gamma_;
  std::vector<double> power_weights_;  // L_g(k dt), k = 1..kappa
  std::unique_ptr<WindowedConvolver> convolver_;
};

/// One BSS trajectory X_n(i dt), i = 0..steps. `sigma` is empty (sigma = 1)
/// or has length truncation + steps holding sigma at cells -N_n..steps-1.
/// Rejects kernels that are not square integrable.
Trajectory simulate_bss(const HybridPlan& plan, std::uint64_t seed, VolatilityPath sigma = {});

/// One TBSS trajectory Y_n(i dt), i = 0..steps, with Y_n(0) = 0. `sigma` is
/// empty or has length steps.
Trajectory simulate_tbss(const HybridPlan& plan, std::uint64_t seed, VolatilityPath sigma = {});

/// Rescales a sigma = 1 trajectory to unit stationary variance.
void normalize_to_unit_variance(Trajectory& path, const Kernel& kernel);

}  // namespace bss
