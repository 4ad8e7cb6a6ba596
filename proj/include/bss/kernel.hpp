#pragma once

#include <string>
#include <string_view>

namespace bss {

enum class KernelFamily { Gamma, PowerLaw, ScaledPower };

std::string_view to_string(KernelFamily family);
KernelFamily parse_kernel_family(std::string_view name);

/// Kernel function g(x) = x^alpha L_g(x) of a Brownian semistationary process.
///
///   Gamma        g(x) = x^alpha exp(-lambda x)
///   PowerLaw     g(x) = x^alpha (1 + x)^(beta - alpha)
///   ScaledPower  g(x) = scale x^alpha
///
/// ScaledPower is not square integrable on (0, inf) and is admitted for
/// truncated (TBSS) use only; `square_integrable()` reports this.
class Kernel {
 public:
  static Kernel gamma(double alpha, double lambda);
  static Kernel power_law(double alpha, double beta);
  static Kernel scaled_power(double alpha, double scale);

  KernelFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  double lambda() const { return lambda_; }
  double beta() const { return beta_; }
  double scale() const { return scale_; }
  bool square_integrable() const { return family_ != KernelFamily::ScaledPower; }

  /// g(x) for x > 0.
  double operator()(double x) const;

  /// L_g(x) = g(x) / x^alpha for x in (0, 1].
  double slowly_varying(double x) const;

  /// L_g without the (0, 1] domain check; the hybrid scheme evaluates it at
  /// k * dt, which for coarse grids on long horizons can exceed 1.
  double slowly_varying_unchecked(double x) const;

  /// One-line human-readable description, e.g. "gamma(alpha=-0.43,lambda=1)".
  std::string describe() const;

  friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
  Kernel(KernelFamily family, double alpha, double lambda, double beta, double scale);

  KernelFamily family_;
  double alpha_;
  double lambda_;
  double beta_;
  double scale_;
};

/// Throws std::domain_error unless alpha lies in (-1/2, 1/2) \ {0}.
void require_roughness_index(double alpha);

/// int_0^inf g(x)^2 dx. Rejects ScaledPower.
double stationary_variance(const Kernel& kernel);

/// int_0^inf g(x) g(x + lag) dx for lag >= 0. Rejects ScaledPower.
double autocovariance(const Kernel& kernel, double lag);

/// int_from^inf g(x)^2 dx for from > 0 (the part of the stationary variance
/// lost when the moving average is truncated). Rejects ScaledPower.
double squared_tail_integral(const Kernel& kernel, double from);

/// Small-lag behaviour of the variogram, V(h) ~ constant h^exponent L_g(h)^2
/// (for unit mean-square volatility).
struct VariogramAsymptote {
  double constant;
  double exponent;
};

VariogramAsymptote variogram_asymptote(const Kernel& kernel);

}  // namespace bss
