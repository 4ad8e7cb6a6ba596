#include "bss/analysis.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bss/errors.hpp"
#include "bss/exact.hpp"
#include "bss/parallel.hpp"
#include "bss/quadrature.hpp"
#include "bss/random.hpp"
#include "bss/specfun.hpp"

namespace bss {

namespace {

// k^p - (k-1)^p, accurate for large k.
double power_increment(double k, double p) {
  if (k <= 1.0) return std::pow(k, p);
  return -std::pow(k, p) * std::expm1(p * std::log1p(-1.0 / k));
}

// Integral of f over the cell [lo, hi]. The first cell may carry the
// kernel singularity at 0, so it gets the double-exponential rule.
template <class F>
double cell_integral(F&& f, double lo, double hi) {
  if (lo == 0.0) return quad::finite(f, lo, hi, 1e-12);
  return quad::gauss_legendre(f, lo, hi);
}

std::size_t grid_resolution(const HybridPlan& plan) {
  return static_cast<std::size_t>(std::llround(plan.resolution()));
}

double near_cell_error(const Kernel& g, double dt, std::size_t k) {
  const double lo = static_cast<double>(k - 1) * dt;
  const double hi = static_cast<double>(k) * dt;
  const double l_k = g.slowly_varying_unchecked(hi);
  const double a2 = 2.0 * g.alpha();
  auto f = [&g, l_k, a2](double u) {
    const double d = l_k - g.slowly_varying_unchecked(u);
    return std::pow(u, a2) * d * d;
  };
  return cell_integral(f, lo, hi);
}

double step_cell_error(const Kernel& g, double dt, std::size_t k, EvaluationRule rule) {
  const double lo = static_cast<double>(k - 1) * dt;
  const double hi = static_cast<double>(k) * dt;
  const double level = g(evaluation_point(rule, g.alpha(), k) * dt);
  auto f = [&g, level](double u) {
    const double d = level - g(u);
    return d * d;
  };
  return cell_integral(f, lo, hi);
}

}  // namespace

double j_summand(double alpha, std::size_t k, EvaluationRule rule) {
  require_roughness_index(alpha);
  if (k == 0) throw std::domain_error("j_summand: k starts at 1");
  const double kk = static_cast<double>(k);
  const double second = power_increment(kk, 2.0 * alpha + 1.0) / (2.0 * alpha + 1.0);
  const double mean = power_increment(kk, alpha + 1.0) / (alpha + 1.0);
  if (rule == EvaluationRule::Optimal) {
    // b*^alpha equals the cell mean of y^alpha.
    return second - mean * mean;
  }
  const double b_pow = std::pow(kk, alpha);
  return second - 2.0 * b_pow * mean + b_pow * b_pow;
}

std::vector<double> j_functional_table(double alpha, std::size_t max_kappa, EvaluationRule rule,
                                       std::size_t terms) {
  require_roughness_index(alpha);
  if (terms < max_kappa + 1) throw std::invalid_argument("j_functional: terms must be at least kappa + 1");

  double correction = 0.0;
  if (alpha > 0.0) {
    const double weight = rule == EvaluationRule::Forward ? alpha * alpha / 3.0 : alpha * alpha / 12.0;
    correction = weight * specfun::hurwitz_zeta(2.0 - 2.0 * alpha, static_cast<double>(terms) + 1.0);
  }

  // Summing from the small end keeps the tail from being swamped; partial
  // sums at k = kappa + 1 give every kappa in one pass.
  std::vector<double> out(max_kappa + 1, 0.0);
  double sum = correction;
  double compensation = 0.0;
  for (std::size_t k = terms; k >= 1; --k) {
    const double y = j_summand(alpha, k, rule) - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    if (k - 1 <= max_kappa) out[k - 1] = sum;
  }
  return out;
}

double j_functional(double alpha, std::size_t kappa, EvaluationRule rule, std::size_t terms) {
  return j_functional_table(alpha, kappa, rule, terms)[kappa];
}

double j_tilde(double alpha) {
  require_roughness_index(alpha);
  return 1.0 / (2.0 * alpha + 1.0) - 2.0 / (alpha + 1.0) + 1.0;
}

double rmse_reduction(double alpha, std::size_t kappa, EvaluationRule rule, std::size_t terms) {
  const double reference = std::sqrt(j_functional(alpha, 0, EvaluationRule::Forward, terms));
  const double value = std::sqrt(j_functional(alpha, kappa, rule, terms));
  return -(value - reference) / reference * 100.0;
}

double theoretical_mse(const HybridPlan& plan, double sigma_sq_mean) {
  const double alpha = plan.kernel.alpha();
  const double n = plan.resolution();
  const double l = plan.kernel.slowly_varying_unchecked(plan.dt);
  return j_functional(alpha, plan.kappa, plan.rule) * sigma_sq_mean * std::pow(n, -(2.0 * alpha + 1.0)) * l * l;
}

MseDecomposition mse_decomposition(const HybridPlan& plan) {
  if (!plan.kernel.square_integrable()) {
    throw std::invalid_argument("mse_decomposition: stationary error needs a square-integrable kernel");
  }
  const Kernel& g = plan.kernel;
  const std::size_t n = grid_resolution(plan);
  MseDecomposition d;
  for (std::size_t k = 1; k <= plan.kappa; ++k) d.near += near_cell_error(g, plan.dt, k);
  for (std::size_t k = plan.kappa + 1; k <= plan.truncation; ++k) {
    const double e = step_cell_error(g, plan.dt, k, plan.rule);
    (k <= n ? d.body : d.far) += e;
  }
  d.truncation = squared_tail_integral(g, static_cast<double>(plan.truncation) * plan.dt);
  return d;
}

double analytic_mse(const HybridPlan& plan) { return mse_decomposition(plan).total(); }

double analytic_mse_moments(const HybridPlan& plan) {
  const Kernel& g = plan.kernel;
  const double a = g.alpha();
  const double dt = plan.dt;
  double second = 0.0;
  double cross = 0.0;
  for (std::size_t k = 1; k <= plan.kappa; ++k) {
    const double lo = static_cast<double>(k - 1) * dt;
    const double hi = static_cast<double>(k) * dt;
    const double l_k = g.slowly_varying_unchecked(hi);
    second += l_k * l_k * (std::pow(hi, 2.0 * a + 1.0) - std::pow(lo, 2.0 * a + 1.0)) / (2.0 * a + 1.0);
    cross += l_k * cell_integral([&g, a](double u) { return g(u) * std::pow(u, a); }, lo, hi);
  }
  for (std::size_t k = plan.kappa + 1; k <= plan.truncation; ++k) {
    const double lo = static_cast<double>(k - 1) * dt;
    const double hi = static_cast<double>(k) * dt;
    const double level = g(evaluation_point(plan.rule, a, k) * dt);
    second += level * level * dt;
    cross += level * cell_integral([&g](double u) { return g(u); }, lo, hi);
  }
  return stationary_variance(g) + second - 2.0 * cross;
}

double analytic_mse_tbss(const HybridPlan& plan) {
  const Kernel& g = plan.kernel;
  double total = 0.0;
  const std::size_t near_cells = std::min(plan.kappa, plan.steps);
  for (std::size_t k = 1; k <= near_cells; ++k) total += near_cell_error(g, plan.dt, k);
  for (std::size_t k = plan.kappa + 1; k <= plan.steps; ++k) total += step_cell_error(g, plan.dt, k, plan.rule);
  return total;
}

std::vector<MseRow> run_mse_experiment(const MseExperiment& e) {
  struct Job {
    std::size_t kernel, kappa, rule, n;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < e.kernels.size(); ++a)
    for (std::size_t k = 0; k < e.kappas.size(); ++k)
      for (std::size_t r = 0; r < e.rules.size(); ++r)
        for (std::size_t i = 0; i < e.resolutions.size(); ++i) jobs.push_back({a, k, r, i});

  std::vector<MseRow> rows;
  rows.reserve(jobs.size());
  for (const Job& j : jobs) {
    rows.push_back(MseRow{e.kernels[j.kernel], e.kappas[j.kappa], e.rules[j.rule], e.resolutions[j.n],
                          e.truncated, 0.0, 0.0, 0.0});
  }
  parallel_for(rows.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      MseRow& row = rows[i];
      HybridPlan plan = e.truncated
                            ? HybridPlan::tbss(row.kernel, row.n, 1.0, row.kappa, row.rule)
                            : HybridPlan::bss(row.kernel, row.n, 1.0, row.kappa, row.rule, e.truncation_exponent);
      row.analytic = e.truncated ? analytic_mse_tbss(plan) : analytic_mse(plan);
      const double alpha = row.kernel.alpha();
      const double l = row.kernel.slowly_varying_unchecked(plan.dt);
      row.theoretical = j_functional(alpha, row.kappa, row.rule, e.j_terms) *
                        std::pow(static_cast<double>(row.n), -(2.0 * alpha + 1.0)) * l * l;
      row.ratio = row.analytic / row.theoretical;
    }
  });
  return rows;
}

CofResult cof_estimate(std::span<const double> x, std::size_t m) {
  if (m < 5) throw std::invalid_argument("cof_estimate: m must be at least 5");
  if (x.size() < m + 1) throw std::invalid_argument("cof_estimate: need at least m + 1 observations");
  double wide = 0.0;
  for (std::size_t k = 5; k <= m; ++k) {
    const double d = x[k] - 2.0 * x[k - 2] + x[k - 4];
    wide += d * d;
  }
  double narrow = 0.0;
  for (std::size_t k = 3; k <= m; ++k) {
    const double d = x[k] - 2.0 * x[k - 1] + x[k - 2];
    narrow += d * d;
  }
  if (!(narrow > 0.0)) throw NumericalError("cof_estimate: second differences vanish (constant or linear input)");
  const double cof = wide / narrow;
  return {cof, std::log(cof) / (2.0 * std::log(2.0)) - 0.5};
}

std::vector<double> subsample(std::span<const double> values, std::size_t s) {
  if (s == 0) throw std::invalid_argument("subsample: step must be at least 1");
  if (values.empty() || (values.size() - 1) % s != 0) {
    throw std::invalid_argument("subsample: length - 1 must be divisible by the step");
  }
  std::vector<double> out;
  out.reserve((values.size() - 1) / s + 1);
  for (std::size_t i = 0; i < values.size(); i += s) out.push_back(values[i]);
  return out;
}

CofSummary run_cof_experiment(const CofExperiment& e) {
  if (e.replications < 2) throw std::invalid_argument("cof experiment: need at least two replications");
  const std::size_t n = e.m * e.s;
  std::vector<double> estimates(e.replications);

  auto estimate = [&e](const std::vector<double>& path) {
    return cof_estimate(subsample(path, e.s), e.m).alpha_hat;
  };

  if (e.source == PathSource::Exact) {
    const ExactBssSimulator sim(ExactPlan{e.kernel, n, 1.0});
    parallel_for(e.replications, [&](std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) estimates[r] = estimate(sim.simulate(derive_seed(e.seed, r)).values);
    });
  } else {
    const HybridSimulator sim(HybridPlan::bss(e.kernel, n, 1.0, e.kappa, e.rule, e.truncation_exponent),
                              HybridSimulator::Mode::Stationary);
    parallel_for(e.replications, [&](std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) estimates[r] = estimate(sim.simulate(derive_seed(e.seed, r)).values);
    });
  }

  const double reps = static_cast<double>(e.replications);
  const double mean = std::accumulate(estimates.begin(), estimates.end(), 0.0) / reps;
  double ss = 0.0;
  for (double a : estimates) ss += (a - mean) * (a - mean);
  return {mean, mean - e.kernel.alpha(), std::sqrt(ss / (reps - 1.0)), e.replications};
}

}  // namespace bss
