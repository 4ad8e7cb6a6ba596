#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bss/hybrid.hpp"
#include "bss/kernel.hpp"

namespace bss {

/// Series cutoff used for the asymptotic MSE constant unless overridden.
inline constexpr std::size_t kDefaultJTerms = 1'000'000;

// ---------------------------------------------------------------------------
// Asymptotic mean square error
// ---------------------------------------------------------------------------

/// int_{k-1}^k (y^alpha - b_k^alpha)^2 dy in closed form.
double j_summand(double alpha, std::size_t k, EvaluationRule rule);

/// Asymptotic MSE constant J(alpha, kappa, b), approximated by the partial sum
/// over k = kappa+1..terms plus, for alpha > 0, the Hurwitz-zeta estimate of
/// the remainder (alpha^2/3 for forward points, alpha^2/12 for optimal ones).
double j_functional(double alpha, std::size_t kappa, EvaluationRule rule,
                    std::size_t terms = kDefaultJTerms);

/// J(alpha, kappa, b) for kappa = 0..max_kappa from a single pass.
std::vector<double> j_functional_table(double alpha, std::size_t max_kappa, EvaluationRule rule,
                                       std::size_t terms = kDefaultJTerms);

/// MSE constant of the truncated-singularity kernel, 1/(2a+1) - 2/(a+1) + 1.
double j_tilde(double alpha);

/// Percentage reduction of the asymptotic RMSE relative to the forward
/// Riemann-sum scheme (kappa = 0, forward points).
double rmse_reduction(double alpha, std::size_t kappa, EvaluationRule rule,
                      std::size_t terms = kDefaultJTerms);

/// J(alpha, kappa, b) E[sigma(0)^2] n^{-(2 alpha + 1)} L_g(1/n)^2 with n = 1/dt.
double theoretical_mse(const HybridPlan& plan, double sigma_sq_mean = 1.0);

// ---------------------------------------------------------------------------
// Exact MSE of the scheme for sigma = 1
// ---------------------------------------------------------------------------

/// E|X(t) - X_n(t)|^2 split by cell range (sigma = 1):
///   near       cells 1..kappa (power-function part)
///   body       cells kappa+1..min(n, N_n)
///   far        cells n+1..N_n
///   truncation int_{N_n/n}^inf g^2
struct MseDecomposition {
  double near = 0.0;
  double body = 0.0;
  double far = 0.0;
  double truncation = 0.0;
  double total() const { return near + body + far + truncation; }
};

/// Stationary process, any grid time (the error is stationary).
MseDecomposition mse_decomposition(const HybridPlan& plan);

/// Same quantity as mse_decomposition(plan).total().
double analytic_mse(const HybridPlan& plan);

/// Same quantity through E X^2 + E X_n^2 - 2 E[X X_n]; loses digits when the
/// MSE is much smaller than the variance, so it serves as a cross-check on
/// coarse grids.
double analytic_mse_moments(const HybridPlan& plan);

/// Truncated process at the last grid time t = steps * dt.
double analytic_mse_tbss(const HybridPlan& plan);

struct MseRow {
  Kernel kernel;
  std::size_t kappa;
  EvaluationRule rule;
  std::size_t n;
  bool truncated;
  double analytic;
  double theoretical;
  double ratio;
};

struct MseExperiment {
  std::vector<Kernel> kernels;
  std::vector<std::size_t> kappas;
  std::vector<EvaluationRule> rules;
  std::vector<std::size_t> resolutions;
  bool truncated = false;  ///< evaluate the TBSS error at t = 1 instead
  double truncation_exponent = 0.5;
  std::size_t j_terms = kDefaultJTerms;
};

/// One row per (kernel, kappa, rule, n), in that nesting order.
std::vector<MseRow> run_mse_experiment(const MseExperiment& experiment);

// ---------------------------------------------------------------------------
// Roughness estimation
// ---------------------------------------------------------------------------

struct CofResult {
  double cof;
  double alpha_hat;
};

/// Change-of-frequency statistic on values[0..m] and the implied estimate
/// alpha_hat = log(cof) / (2 log 2) - 1/2. Throws NumericalError when the
/// second-difference sum vanishes.
CofResult cof_estimate(std::span<const double> values, std::size_t m);

/// Every s-th value; (values.size() - 1) must be divisible by s.
std::vector<double> subsample(std::span<const double> values, std::size_t s);

enum class PathSource { Exact, Hybrid };

struct CofExperiment {
  Kernel kernel;
  PathSource source = PathSource::Exact;
  std::size_t kappa = 1;
  EvaluationRule rule = EvaluationRule::Optimal;
  std::size_t m = 500;
  std::size_t s = 1;
  std::size_t replications = 1000;
  double truncation_exponent = 0.5;
  std::uint64_t seed = 1;
};

struct CofSummary {
  double mean_alpha_hat;
  double bias;
  double stdev;
  std::size_t replications;
};

/// Simulates n = m s points on [0, 1], keeps every s-th, estimates alpha,
/// and summarises over replications. Replication r uses derive_seed(seed, r).
CofSummary run_cof_experiment(const CofExperiment& experiment);

}  // namespace bss
