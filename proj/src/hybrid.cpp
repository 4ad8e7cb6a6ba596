#include "bss/hybrid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>

#include "bss/errors.hpp"
#include "bss/specfun.hpp"

namespace bss {

namespace {

// k^p - (k-1)^p without cancellation for large k.
double power_increment(double k, double p) {
  if (k <= 1.0) return std::pow(k, p);
  return -std::pow(k, p) * std::expm1(p * std::log1p(-1.0 / k));
}

void validate_plan(const HybridPlan& plan, HybridSimulator::Mode mode) {
  if (!(plan.dt > 0.0)) throw std::invalid_argument("hybrid plan: dt must be positive");
  if (plan.steps == 0) throw std::invalid_argument("hybrid plan: at least one step required");
  if (mode == HybridSimulator::Mode::Stationary) {
    if (!plan.kernel.square_integrable()) {
      throw std::invalid_argument("hybrid plan: stationary simulation needs a square-integrable kernel");
    }
    if (plan.truncation < plan.kappa + 1) {
      throw std::invalid_argument("hybrid plan: truncation N_n must be at least kappa + 1");
    }
    if (!(static_cast<double>(plan.kappa) * plan.dt < 1.0)) {
      throw std::invalid_argument("hybrid plan: kappa must be smaller than n");
    }
  }
}

}  // namespace

std::string_view to_string(EvaluationRule rule) {
  return rule == EvaluationRule::Forward ? "forward" : "optimal";
}

EvaluationRule parse_evaluation_rule(std::string_view name) {
  if (name == "forward" || name == "fwd") return EvaluationRule::Forward;
  if (name == "optimal" || name == "opt") return EvaluationRule::Optimal;
  throw std::invalid_argument("unknown evaluation rule '" + std::string(name) + "'");
}

std::string_view to_string(TrajectoryLabel label) {
  switch (label) {
    case TrajectoryLabel::BSS:
      return "BSS";
    case TrajectoryLabel::TBSS:
      return "TBSS";
    case TrajectoryLabel::Exact:
      return "Exact";
  }
  return "?";
}

double evaluation_point(EvaluationRule rule, double alpha, std::size_t k) {
  if (k == 0) throw std::domain_error("evaluation_point: cells are numbered from 1");
  const double kk = static_cast<double>(k);
  if (rule == EvaluationRule::Forward) return kk;
  require_roughness_index(alpha);
  // Mean of y^alpha over [k-1, k], mapped back through y -> y^{1/alpha}.
  const double mean_power = power_increment(kk, alpha + 1.0) / (alpha + 1.0);
  return std::exp(std::log(mean_power) / alpha);
}

InnovationCovariance::InnovationCovariance(double alpha, double dt, std::size_t kappa)
    : alpha_(alpha), dt_(dt), kappa_(kappa) {
  require_roughness_index(alpha);
  if (!(dt > 0.0)) throw std::invalid_argument("innovation covariance: dt must be positive");

  const std::size_t dim = kappa + 1;
  const double a1 = alpha + 1.0;
  const double a2 = 2.0 * alpha + 1.0;
  const double dt_a1 = std::pow(dt, a1);
  const double dt_a2 = std::pow(dt, a2);
  sigma_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  sigma_(0, 0) = dt;
  // Matrix indices are zero-based; entry (j-1, k-1) below is Sigma_{j,k}.
  for (std::size_t j = 2; j <= dim; ++j) {
    const double jm1 = static_cast<double>(j - 1);
    const double jm2 = static_cast<double>(j - 2);
    const auto J = static_cast<Eigen::Index>(j - 1);
    sigma_(0, J) = (std::pow(jm1, a1) - std::pow(jm2, a1)) / a1 * dt_a1;
    sigma_(J, 0) = sigma_(0, J);
    sigma_(J, J) = (std::pow(jm1, a2) - std::pow(jm2, a2)) / a2 * dt_a2;
    for (std::size_t k = j + 1; k <= dim; ++k) {
      const double km1 = static_cast<double>(k - 1);
      const double km2 = static_cast<double>(k - 2);
      double value = std::pow(jm1, a1) * std::pow(km1, alpha) * specfun::hyp2f1_special(alpha, jm1 / km1);
      // (j-2)^{alpha+1} vanishes for j = 2; skip the 0/0 hypergeometric argument.
      if (j > 2) {
        value -= std::pow(jm2, a1) * std::pow(km2, alpha) * specfun::hyp2f1_special(alpha, jm2 / km2);
      }
      const auto K = static_cast<Eigen::Index>(k - 1);
      sigma_(J, K) = value / a1 * dt_a2;
      sigma_(K, J) = sigma_(J, K);
    }
  }

  Eigen::LLT<Eigen::MatrixXd> llt(sigma_);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("innovation covariance is not positive definite (alpha=" +
                         std::to_string(alpha) + ", kappa=" + std::to_string(kappa) + ")");
  }
  chol_ = llt.matrixL();
}

InnovationCovariance innovation_covariance(double alpha, std::size_t n, std::size_t kappa) {
  if (n == 0) throw std::invalid_argument("innovation covariance: n must be positive");
  return InnovationCovariance(alpha, 1.0 / static_cast<double>(n), kappa);
}

InnovationMatrix sample_innovations(const InnovationCovariance& cov, std::size_t count,
                                    NormalStream& normals) {
  const auto dim = static_cast<Eigen::Index>(cov.dimension());
  InnovationMatrix out(static_cast<Eigen::Index>(count), dim);
  const Eigen::MatrixXd& chol = cov.cholesky();
  Eigen::VectorXd z(dim);
  for (Eigen::Index r = 0; r < static_cast<Eigen::Index>(count); ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) z(c) = normals();
    // Lower-triangular product written out so the zero upper half is skipped.
    for (Eigen::Index i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (Eigen::Index j = 0; j <= i; ++j) acc += chol(i, j) * z(j);
      out(r, i) = acc;
    }
  }
  return out;
}

InnovationMatrix sample_innovations(const InnovationCovariance& cov, std::size_t count,
                                    std::uint64_t seed) {
  NormalStream normals(seed);
  return sample_innovations(cov, count, normals);
}

HybridPlan HybridPlan::bss(const Kernel& kernel, std::size_t n, double horizon, std::size_t kappa,
                           EvaluationRule rule, double truncation_exponent) {
  if (n == 0) throw std::invalid_argument("hybrid plan: n must be positive");
  if (!(horizon > 0.0)) throw std::invalid_argument("hybrid plan: horizon T must be positive");
  if (!(truncation_exponent > 0.0)) throw std::invalid_argument("hybrid plan: gamma must be positive");
  if (kernel.family() == KernelFamily::PowerLaw) {
    const double a = kernel.alpha();
    const double b = kernel.beta();
    if (!(truncation_exponent > -(2.0 * a + 1.0) / (2.0 * b + 1.0))) {
      throw std::invalid_argument(
          "hybrid plan: gamma must exceed -(2 alpha + 1)/(2 beta + 1) for the power-law kernel");
    }
  }
  const double nn = static_cast<double>(n);
  HybridPlan plan{kernel};
  plan.kappa = kappa;
  plan.rule = rule;
  plan.dt = 1.0 / nn;
  plan.steps = static_cast<std::size_t>(std::floor(nn * horizon + 1e-9));
  plan.truncation = static_cast<std::size_t>(std::floor(std::pow(nn, 1.0 + truncation_exponent) + 1e-9));
  plan.truncation_exponent = truncation_exponent;
  validate_plan(plan, HybridSimulator::Mode::Stationary);
  return plan;
}

HybridPlan HybridPlan::tbss(const Kernel& kernel, std::size_t steps, double horizon, std::size_t kappa,
                            EvaluationRule rule) {
  if (steps == 0) throw std::invalid_argument("hybrid plan: steps must be positive");
  if (!(horizon > 0.0)) throw std::invalid_argument("hybrid plan: horizon T must be positive");
  HybridPlan plan{kernel};
  plan.kappa = kappa;
  plan.rule = rule;
  plan.dt = horizon / static_cast<double>(steps);
  plan.steps = steps;
  plan.truncation = steps;
  validate_plan(plan, HybridSimulator::Mode::Truncated);
  return plan;
}

HybridSimulator::HybridSimulator(HybridPlan plan, Mode mode)
    : plan_(std::move(plan)), mode_(mode), cov_(plan_.kernel.alpha(), plan_.dt, plan_.kappa) {
  validate_plan(plan_, mode_);
  const double alpha = plan_.kernel.alpha();
  const std::size_t cells = mode_ == Mode::Stationary ? plan_.truncation : plan_.steps;

  gamma_.assign(cells + 1, 0.0);
  for (std::size_t k = plan_.kappa + 1; k <= cells; ++k) {
    gamma_[k] = plan_.kernel(evaluation_point(plan_.rule, alpha, k) * plan_.dt);
  }
  power_weights_.resize(plan_.kappa);
  for (std::size_t k = 1; k <= plan_.kappa; ++k) {
    power_weights_[k - 1] = plan_.kernel.slowly_varying_unchecked(static_cast<double>(k) * plan_.dt);
  }

  const std::size_t first = mode_ == Mode::Stationary ? plan_.truncation : 0;
  convolver_ = std::make_unique<WindowedConvolver>(gamma_, innovation_rows(), first, plan_.steps + 1,
                                                   plan_.convolution);
}

std::size_t HybridSimulator::innovation_rows() const {
  return mode_ == Mode::Stationary ? plan_.truncation + plan_.steps : plan_.steps;
}

std::vector<double> HybridSimulator::synthesize(const InnovationMatrix& innovations,
                                                VolatilityPath sigma) const {
  const std::size_t rows = innovation_rows();
  if (static_cast<std::size_t>(innovations.rows()) != rows ||
      static_cast<std::size_t>(innovations.cols()) != plan_.kappa + 1) {
    throw std::invalid_argument("hybrid synthesize: innovation matrix has wrong shape");
  }
  if (!sigma.empty() && sigma.size() != rows) {
    throw std::invalid_argument("hybrid synthesize: volatility path must have " + std::to_string(rows) +
                                " values, got " + std::to_string(sigma.size()));
  }
  auto vol = [&sigma](std::size_t r) { return sigma.empty() ? 1.0 : sigma[r]; };

  std::vector<double> xi(rows);
  for (std::size_t r = 0; r < rows; ++r) xi[r] = vol(r) * innovations(static_cast<Eigen::Index>(r), 0);

  std::vector<double> out(plan_.steps + 1);
  convolver_->apply(xi, out);

  // Row offset between grid index i and innovation row of cell i.
  const std::size_t offset = mode_ == Mode::Stationary ? plan_.truncation : 0;
  for (std::size_t i = 0; i <= plan_.steps; ++i) {
    double near = 0.0;
    const std::size_t kmax = mode_ == Mode::Stationary ? plan_.kappa : std::min(i, plan_.kappa);
    for (std::size_t k = 1; k <= kmax; ++k) {
      const std::size_t r = i + offset - k;
      near += power_weights_[k - 1] * vol(r) * innovations(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k));
    }
    out[i] = near + out[i];
  }
  // Both sums are empty at the origin; the FFT would leave rounding noise.
  if (mode_ == Mode::Truncated) out[0] = 0.0;
  return out;
}

Trajectory HybridSimulator::simulate(std::uint64_t seed, VolatilityPath sigma) const {
  const InnovationMatrix innovations = sample_innovations(cov_, innovation_rows(), seed);
  Trajectory path;
  path.values = synthesize(innovations, sigma);
  path.dt = plan_.dt;
  path.seed = seed;
  path.label = mode_ == Mode::Stationary ? TrajectoryLabel::BSS : TrajectoryLabel::TBSS;
  return path;
}

Trajectory simulate_bss(const HybridPlan& plan, std::uint64_t seed, VolatilityPath sigma) {
  return HybridSimulator(plan, HybridSimulator::Mode::Stationary).simulate(seed, sigma);
}

Trajectory simulate_tbss(const HybridPlan& plan, std::uint64_t seed, VolatilityPath sigma) {
  return HybridSimulator(plan, HybridSimulator::Mode::Truncated).simulate(seed, sigma);
}

void normalize_to_unit_variance(Trajectory& path, const Kernel& kernel) {
  const double scale = 1.0 / std::sqrt(stationary_variance(kernel));
  for (double& v : path.values) v *= scale;
}

}  // namespace bss
