#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace bss {

/// Rough Bergomi model with flat forward variance and zero rates:
///   v(t) = xi exp(eta Y(t) - eta^2/2 t^{2 alpha + 1}),
///   Y(t) = sqrt(2 alpha + 1) int_0^t (t - s)^alpha dW(s),
///   dS = S sqrt(v) dZ,  Z = rho W + sqrt(1 - rho^2) W_perp.
struct RBergomiParams {
  double s0 = 1.0;
  double xi = 0.235 * 0.235;
  double eta = 1.9;
  double alpha = -0.43;
  double rho = -0.9;
  double maturity = 1.0;

  /// Throws std::domain_error naming the violated range.
  void validate() const;
};

enum class PricingScheme { HybridK1, HybridK2, RiemannFwd, RiemannOpt, Exact };

std::string_view to_string(PricingScheme scheme);
PricingScheme parse_pricing_scheme(std::string_view name);

struct PathOptions {
  /// Negate every Gaussian draw (antithetic path set).
  bool antithetic = false;
};

/// Terminal prices S(T) of `paths` log-Euler paths with `steps` steps.
/// Path p draws from derive_seed(seed, p): first the volatility-driver
/// innovations, then the independent W_perp increments.
std::vector<double> simulate_terminal_prices(const RBergomiParams& params, std::size_t steps,
                                             std::size_t paths, PricingScheme scheme, std::uint64_t seed,
                                             PathOptions options = {});

/// Spot variance v(t_i), i = 0..steps, for each path (same streams as
/// simulate_terminal_prices). Row-major, paths x (steps + 1).
std::vector<double> simulate_variance_paths(const RBergomiParams& params, std::size_t steps,
                                            std::size_t paths, PricingScheme scheme, std::uint64_t seed,
                                            PathOptions options = {});

struct McEstimate {
  double value;
  double std_error;
};

/// E[(S(T) - K)^+] and its Monte Carlo standard error. K = 0 returns the mean
/// of S(T).
McEstimate price_call(std::span<const double> terminal_prices, double strike);

/// Zero-rate Black-Scholes call price.
double black_scholes_call(double s0, double strike, double maturity, double vol);

/// d price / d vol of the above.
double black_scholes_vega(double s0, double strike, double maturity, double vol);

enum class ImpliedVolFailure { None, BelowIntrinsic, AboveSpot, OutsideBracket };

std::string_view to_string(ImpliedVolFailure reason);

struct ImpliedVol {
  std::optional<double> vol;
  ImpliedVolFailure reason = ImpliedVolFailure::None;
};

/// Black-Scholes implied volatility by bracketed root search on [1e-6, 5]
/// (price tolerance 1e-10). Absent with a reason when the price is at or below
/// intrinsic value, at or above the spot, or outside the bracket.
ImpliedVol implied_vol(double price, double s0, double strike, double maturity);

struct SmileRow {
  double log_strike;
  double strike;
  double price;
  double mc_stderr;
  std::optional<double> implied_vol;
  /// Standard error of the implied volatility (price error over vega).
  std::optional<double> iv_stderr;
};

/// One row per log-strike, all strikes priced on a common path set.
std::vector<SmileRow> smile(const RBergomiParams& params, std::size_t steps, std::size_t paths,
                            PricingScheme scheme, std::span<const double> log_strikes, std::uint64_t seed,
                            PathOptions options = {});

/// Smile rows from already simulated terminal prices.
std::vector<SmileRow> smile_from_prices(const RBergomiParams& params, std::span<const double> terminal_prices,
                                        std::span<const double> log_strikes);

/// Default log-strike grid: 25 points on [-0.05, 0.03] for maturities below
/// 0.1, otherwise on [-0.4, 0.2].
std::vector<double> default_log_strikes(double maturity);

}  // namespace bss
