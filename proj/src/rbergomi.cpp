#include "bss/rbergomi.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "bss/exact.hpp"
#include "bss/hybrid.hpp"
#include "bss/kernel.hpp"
#include "bss/parallel.hpp"
#include "bss/random.hpp"

namespace bss {

void RBergomiParams::validate() const {
  if (!(s0 > 0.0)) throw std::domain_error("rbergomi: S(0) must be positive");
  if (!(xi > 0.0)) throw std::domain_error("rbergomi: xi must be positive");
  if (!(eta >= 0.0)) throw std::domain_error("rbergomi: eta must be non-negative");
  if (!(alpha > -0.5 && alpha < 0.0)) throw std::domain_error("rbergomi: alpha must lie in (-1/2, 0)");
  if (!(rho > -1.0 && rho < 1.0)) throw std::domain_error("rbergomi: rho must lie in (-1, 1)");
  if (!(maturity > 0.0)) throw std::domain_error("rbergomi: maturity must be positive");
}

std::string_view to_string(PricingScheme scheme) {
  switch (scheme) {
    case PricingScheme::HybridK1:
      return "hybrid1";
    case PricingScheme::HybridK2:
      return "hybrid2";
    case PricingScheme::RiemannFwd:
      return "riemann-fwd";
    case PricingScheme::RiemannOpt:
      return "riemann-opt";
    case PricingScheme::Exact:
      return "exact";
  }
  return "?";
}

PricingScheme parse_pricing_scheme(std::string_view name) {
  if (name == "hybrid1" || name == "hybrid-k1" || name == "hybrid") return PricingScheme::HybridK1;
  if (name == "hybrid2" || name == "hybrid-k2") return PricingScheme::HybridK2;
  if (name == "riemann-fwd" || name == "riemann") return PricingScheme::RiemannFwd;
  if (name == "riemann-opt") return PricingScheme::RiemannOpt;
  if (name == "exact") return PricingScheme::Exact;
  throw std::invalid_argument("unknown pricing scheme '" + std::string(name) + "'");
}

namespace {

constexpr std::size_t kBlock = 128;

// Generates the volatility driver for blocks of paths and runs the log-Euler
// recursion. Each path owns one normal stream: driver draws, then W_perp.
class PathEngine {
 public:
  PathEngine(const RBergomiParams& p, std::size_t steps, PricingScheme scheme, PathOptions options)
      : p_(p), steps_(steps), scheme_(scheme), options_(options), dt_(p.maturity / static_cast<double>(steps)) {
    p_.validate();
    if (steps < 2) throw std::invalid_argument("rbergomi: need at least two time steps");
    const double scale = std::sqrt(2.0 * p.alpha + 1.0);
    if (scheme == PricingScheme::Exact) {
      exact_ = std::make_unique<ExactPowerTbss>(p.alpha, scale, steps, p.maturity, true);
    } else {
      std::size_t kappa = 0;
      EvaluationRule rule = EvaluationRule::Optimal;
      switch (scheme) {
        case PricingScheme::HybridK1:
          kappa = 1;
          break;
        case PricingScheme::HybridK2:
          kappa = 2;
          break;
        case PricingScheme::RiemannFwd:
          rule = EvaluationRule::Forward;
          break;
        default:
          break;
      }
      hybrid_ = std::make_unique<HybridSimulator>(
          HybridPlan::tbss(Kernel::scaled_power(p.alpha, scale), steps, p.maturity, kappa, rule),
          HybridSimulator::Mode::Truncated);
    }
    compensator_.resize(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
      const double t = static_cast<double>(i) * dt_;
      compensator_[i] = 0.5 * p.eta * p.eta * std::pow(t, 2.0 * p.alpha + 1.0);
    }
  }

  // Runs paths [begin, end); variance is either empty or (end-begin) x (steps+1).
  void run(std::uint64_t seed, std::size_t begin, std::size_t end, std::span<double> terminal,
           std::span<double> variance) const {
    std::vector<double> y(steps_ + 1);
    std::vector<double> dw(steps_);
    std::vector<double> dw_perp(steps_);
    std::vector<NormalStream> streams;

    for (std::size_t b0 = begin; b0 < end; b0 += kBlock) {
      const std::size_t b1 = std::min(end, b0 + kBlock);
      Eigen::MatrixXd driver;
      std::vector<std::vector<double>> perp;
      if (exact_) {
        const auto dim = static_cast<Eigen::Index>(exact_->sampler().dimension());
        Eigen::MatrixXd z(dim, static_cast<Eigen::Index>(b1 - b0));
        perp.resize(b1 - b0);
        for (std::size_t p = b0; p < b1; ++p) {
          NormalStream normals(derive_seed(seed, p), options_.antithetic);
          const auto col = static_cast<Eigen::Index>(p - b0);
          for (Eigen::Index r = 0; r < dim; ++r) z(r, col) = normals();
          perp[p - b0].resize(steps_);
          normals.fill(perp[p - b0]);
        }
        driver = exact_->sampler().factor().triangularView<Eigen::Lower>() * z;
      }

      for (std::size_t p = b0; p < b1; ++p) {
        if (exact_) {
          const auto col = static_cast<Eigen::Index>(p - b0);
          const auto m = static_cast<Eigen::Index>(steps_);
          y[0] = 0.0;
          double prev_w = 0.0;
          for (std::size_t i = 0; i < steps_; ++i) {
            const double w = driver(static_cast<Eigen::Index>(i), col);
            dw[i] = w - prev_w;
            prev_w = w;
            y[i + 1] = driver(m + static_cast<Eigen::Index>(i), col);
          }
          std::copy(perp[p - b0].begin(), perp[p - b0].end(), dw_perp.begin());
        } else {
          NormalStream normals(derive_seed(seed, p), options_.antithetic);
          const InnovationMatrix innovations = sample_innovations(hybrid_->covariance(), steps_, normals);
          y = hybrid_->synthesize(innovations);
          for (std::size_t i = 0; i < steps_; ++i) dw[i] = innovations(static_cast<Eigen::Index>(i), 0);
          normals.fill(dw_perp);
        }
        terminal[p - begin] = evolve(y, dw, dw_perp, variance.empty() ? std::span<double>{}
                                                                      : variance.subspan((p - begin) * (steps_ + 1), steps_ + 1));
      }
    }
  }

 private:
  double evolve(const std::vector<double>& y, const std::vector<double>& dw, const std::vector<double>& dw_perp,
                std::span<double> variance) const {
    const double rho_perp = std::sqrt(1.0 - p_.rho * p_.rho);
    const double sqrt_dt = std::sqrt(dt_);
    double log_s = std::log(p_.s0);
    for (std::size_t i = 0; i < steps_; ++i) {
      const double v = p_.xi * std::exp(p_.eta * y[i] - compensator_[i]);
      if (!variance.empty()) variance[i] = v;
      const double dz = p_.rho * dw[i] + rho_perp * sqrt_dt * dw_perp[i];
      log_s += std::sqrt(v) * dz - 0.5 * v * dt_;
    }
    if (!variance.empty()) variance[steps_] = p_.xi * std::exp(p_.eta * y[steps_] - compensator_[steps_]);
    return std::exp(log_s);
  }

  RBergomiParams p_;
  std::size_t steps_;
  PricingScheme scheme_;
  PathOptions options_;
  double dt_;
  std::vector<double> compensator_;
  std::unique_ptr<ExactPowerTbss> exact_;
  std::unique_ptr<HybridSimulator> hybrid_;
};

void run_engine(const PathEngine& engine, std::size_t steps, std::size_t paths, std::uint64_t seed,
                std::vector<double>& terminal, std::vector<double>* variance) {
  if (paths == 0) throw std::invalid_argument("rbergomi: need at least one path");
  terminal.assign(paths, 0.0);
  if (variance) variance->assign(paths * (steps + 1), 0.0);
  const std::size_t blocks = (paths + kBlock - 1) / kBlock;
  parallel_for(blocks, [&](std::size_t b_begin, std::size_t b_end) {
    const std::size_t begin = b_begin * kBlock;
    const std::size_t end = std::min(paths, b_end * kBlock);
    std::span<double> out(terminal.data() + begin, end - begin);
    std::span<double> var;
    if (variance) var = std::span<double>(variance->data() + begin * (steps + 1), (end - begin) * (steps + 1));
    engine.run(seed, begin, end, out, var);
  });
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

std::vector<double> simulate_terminal_prices(const RBergomiParams& params, std::size_t steps, std::size_t paths,
                                             PricingScheme scheme, std::uint64_t seed, PathOptions options) {
  const PathEngine engine(params, steps, scheme, options);
  std::vector<double> terminal;
  run_engine(engine, steps, paths, seed, terminal, nullptr);
  return terminal;
}

std::vector<double> simulate_variance_paths(const RBergomiParams& params, std::size_t steps, std::size_t paths,
                                            PricingScheme scheme, std::uint64_t seed, PathOptions options) {
  const PathEngine engine(params, steps, scheme, options);
  std::vector<double> terminal;
  std::vector<double> variance;
  run_engine(engine, steps, paths, seed, terminal, &variance);
  return variance;
}

McEstimate price_call(std::span<const double> prices, double strike) {
  if (prices.empty()) throw std::invalid_argument("price_call: no terminal prices");
  if (!(strike >= 0.0)) throw std::domain_error("price_call: strike must be non-negative");
  double sum = 0.0, c1 = 0.0;
  double sum_sq = 0.0, c2 = 0.0;
  auto add = [](double& s, double& c, double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  };
  for (double s : prices) {
    const double payoff = std::max(s - strike, 0.0);
    add(sum, c1, payoff);
    add(sum_sq, c2, payoff * payoff);
  }
  const double n = static_cast<double>(prices.size());
  const double mean = sum / n;
  const double var = n > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
  return {mean, std::sqrt(var / n)};
}

double black_scholes_call(double s0, double strike, double maturity, double vol) {
  if (strike <= 0.0) return s0;
  const double sd = vol * std::sqrt(maturity);
  if (sd <= 0.0) return std::max(s0 - strike, 0.0);
  const double d1 = (std::log(s0 / strike) + 0.5 * sd * sd) / sd;
  return s0 * normal_cdf(d1) - strike * normal_cdf(d1 - sd);
}

double black_scholes_vega(double s0, double strike, double maturity, double vol) {
  const double sd = vol * std::sqrt(maturity);
  if (sd <= 0.0 || strike <= 0.0) return 0.0;
  const double d1 = (std::log(s0 / strike) + 0.5 * sd * sd) / sd;
  return s0 * std::exp(-0.5 * d1 * d1) / std::sqrt(2.0 * M_PI) * std::sqrt(maturity);
}

std::string_view to_string(ImpliedVolFailure reason) {
  switch (reason) {
    case ImpliedVolFailure::None:
      return "";
    case ImpliedVolFailure::BelowIntrinsic:
      return "price at or below intrinsic value";
    case ImpliedVolFailure::AboveSpot:
      return "price at or above spot";
    case ImpliedVolFailure::OutsideBracket:
      return "no root in [1e-6, 5]";
  }
  return "?";
}

ImpliedVol implied_vol(double price, double s0, double strike, double maturity) {
  if (!(maturity > 0.0)) throw std::domain_error("implied_vol: maturity must be positive");
  if (!(strike > 0.0)) throw std::domain_error("implied_vol: strike must be positive");
  if (price <= std::max(s0 - strike, 0.0)) return {std::nullopt, ImpliedVolFailure::BelowIntrinsic};
  if (price >= s0) return {std::nullopt, ImpliedVolFailure::AboveSpot};

  constexpr double kPriceTol = 1e-10;
  double lo = 1e-6, hi = 5.0;
  auto f = [&](double v) { return black_scholes_call(s0, strike, maturity, v) - price; };
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (std::abs(f_lo) <= kPriceTol) return {lo, ImpliedVolFailure::None};
  if (std::abs(f_hi) <= kPriceTol) return {hi, ImpliedVolFailure::None};
  if (f_lo > 0.0 || f_hi < 0.0) return {std::nullopt, ImpliedVolFailure::OutsideBracket};

  // Newton inside the bracket, bisection whenever Newton leaves it.
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 300; ++it) {
    const double fx = f(x);
    if (std::abs(fx) <= kPriceTol) break;
    (fx > 0.0 ? hi : lo) = x;
    const double vega = black_scholes_vega(s0, strike, maturity, x);
    double next = vega > 0.0 ? x - fx / vega : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-15 * hi) break;
    x = next;
  }
  return {x, ImpliedVolFailure::None};
}

std::vector<SmileRow> smile_from_prices(const RBergomiParams& params, std::span<const double> terminal_prices,
                                        std::span<const double> log_strikes) {
  std::vector<SmileRow> rows;
  rows.reserve(log_strikes.size());
  for (double k : log_strikes) {
    SmileRow row{};
    row.log_strike = k;
    row.strike = params.s0 * std::exp(k);
    const McEstimate est = price_call(terminal_prices, row.strike);
    row.price = est.value;
    row.mc_stderr = est.std_error;
    const ImpliedVol iv = implied_vol(row.price, params.s0, row.strike, params.maturity);
    row.implied_vol = iv.vol;
    if (iv.vol) {
      const double vega = black_scholes_vega(params.s0, row.strike, params.maturity, *iv.vol);
      if (vega > 0.0) row.iv_stderr = est.std_error / vega;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<SmileRow> smile(const RBergomiParams& params, std::size_t steps, std::size_t paths,
                            PricingScheme scheme, std::span<const double> log_strikes, std::uint64_t seed,
                            PathOptions options) {
  if (log_strikes.empty()) throw std::invalid_argument("smile: empty strike grid");
  const std::vector<double> terminal = simulate_terminal_prices(params, steps, paths, scheme, seed, options);
  return smile_from_prices(params, terminal, log_strikes);
}

std::vector<double> default_log_strikes(double maturity) {
  const bool short_dated = maturity < 0.1;
  const double lo = short_dated ? -0.05 : -0.4;
  const double hi = short_dated ? 0.03 : 0.2;
  constexpr int kPoints = 25;
  std::vector<double> grid(kPoints);
  for (int i = 0; i < kPoints; ++i) grid[i] = lo + (hi - lo) * i / (kPoints - 1);
  return grid;
}

}  // namespace bss
