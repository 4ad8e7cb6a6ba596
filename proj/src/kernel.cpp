#include "bss/kernel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bss/csv.hpp"
#include "bss/quadrature.hpp"

namespace bss {

namespace {

void require_integrable(const Kernel& kernel, const char* what) {
  if (!kernel.square_integrable()) {
    throw std::invalid_argument(std::string(what) +
                                ": scaled power kernel is not square integrable on (0, inf)");
  }
}

// g(1/u), written so that it stays finite as u -> 0.
double g_at_reciprocal(const Kernel& k, double u) {
  switch (k.family()) {
    case KernelFamily::Gamma:
      return std::exp(-k.alpha() * std::log(u) - k.lambda() / u);
    case KernelFamily::PowerLaw:
      return std::pow(u, -k.beta()) * std::pow(1.0 + u, k.beta() - k.alpha());
    case KernelFamily::ScaledPower:
      return k.scale() * std::pow(u, -k.alpha());
  }
  return 0.0;
}

// int_1^inf g(x) g(x + lag) dx via x = 1/t.
double tail_product_integral(const Kernel& k, double lag) {
  auto f = [&k, lag](double t) {
    if (t <= 0.0) return 0.0;
    const double u = t / (1.0 + lag * t);
    return g_at_reciprocal(k, t) * g_at_reciprocal(k, u) / (t * t);
  };
  return quad::finite(f, 0.0, 1.0, 1e-13);
}

// int_a^b g(x) g(x + lag) dx for 0 <= a < b <= 1 after x = u^{1/(alpha+1)},
// which absorbs the x^alpha factor of the first g.
double head_product_integral(const Kernel& k, double lag, double a, double b) {
  const double p = 1.0 / (k.alpha() + 1.0);
  auto f = [&k, lag, p](double u) {
    const double x = std::pow(u, p);
    return p * k.slowly_varying_unchecked(x) * k(x + lag);
  };
  return quad::finite(f, std::pow(a, k.alpha() + 1.0), std::pow(b, k.alpha() + 1.0), 1e-13);
}

}  // namespace

std::string_view to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::Gamma:
      return "gamma";
    case KernelFamily::PowerLaw:
      return "powerlaw";
    case KernelFamily::ScaledPower:
      return "scaledpower";
  }
  return "unknown";
}

KernelFamily parse_kernel_family(std::string_view name) {
  if (name == "gamma") return KernelFamily::Gamma;
  if (name == "powerlaw" || name == "power-law" || name == "power_law") return KernelFamily::PowerLaw;
  if (name == "scaledpower" || name == "scaled-power" || name == "power") return KernelFamily::ScaledPower;
  throw std::invalid_argument("unknown kernel family '" + std::string(name) + "'");
}

void require_roughness_index(double alpha) {
  if (!(alpha > -0.5 && alpha < 0.5) || alpha == 0.0) {
    throw std::domain_error("roughness index alpha must lie in (-1/2, 1/2) \\ {0}");
  }
}

Kernel::Kernel(KernelFamily family, double alpha, double lambda, double beta, double scale)
    : family_(family), alpha_(alpha), lambda_(lambda), beta_(beta), scale_(scale) {
  require_roughness_index(alpha);
}

Kernel Kernel::gamma(double alpha, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("gamma kernel: lambda must be positive");
  return Kernel(KernelFamily::Gamma, alpha, lambda, 0.0, 1.0);
}

Kernel Kernel::power_law(double alpha, double beta) {
  if (!(beta < -0.5)) throw std::domain_error("power-law kernel: beta must be below -1/2");
  return Kernel(KernelFamily::PowerLaw, alpha, 0.0, beta, 1.0);
}

Kernel Kernel::scaled_power(double alpha, double scale) {
  if (!(scale > 0.0)) throw std::domain_error("scaled power kernel: scale must be positive");
  return Kernel(KernelFamily::ScaledPower, alpha, 0.0, 0.0, scale);
}

double Kernel::operator()(double x) const {
  if (!(x > 0.0)) throw std::domain_error("kernel evaluated at non-positive argument");
  switch (family_) {
    case KernelFamily::Gamma:
      return std::pow(x, alpha_) * std::exp(-lambda_ * x);
    case KernelFamily::PowerLaw:
      return std::pow(x, alpha_) * std::pow(1.0 + x, beta_ - alpha_);
    case KernelFamily::ScaledPower:
      return scale_ * std::pow(x, alpha_);
  }
  return 0.0;
}

double Kernel::slowly_varying(double x) const {
  if (!(x > 0.0 && x <= 1.0)) throw std::domain_error("L_g evaluated outside (0, 1]");
  return slowly_varying_unchecked(x);
}

double Kernel::slowly_varying_unchecked(double x) const {
  switch (family_) {
    case KernelFamily::Gamma:
      return std::exp(-lambda_ * x);
    case KernelFamily::PowerLaw:
      return std::pow(1.0 + x, beta_ - alpha_);
    case KernelFamily::ScaledPower:
      return scale_;
  }
  return 0.0;
}

std::string Kernel::describe() const {
  std::ostringstream os;
  os << to_string(family_) << "(alpha=" << format_double(alpha_);
  switch (family_) {
    case KernelFamily::Gamma:
      os << ",lambda=" << format_double(lambda_);
      break;
    case KernelFamily::PowerLaw:
      os << ",beta=" << format_double(beta_);
      break;
    case KernelFamily::ScaledPower:
      os << ",scale=" << format_double(scale_);
      break;
  }
  os << ')';
  return os.str();
}

double stationary_variance(const Kernel& kernel) {
  require_integrable(kernel, "stationary_variance");
  // x = u^{1/(2 alpha + 1)} on (0, 1] turns x^{2 alpha} dx into a constant.
  const double p = 1.0 / (2.0 * kernel.alpha() + 1.0);
  auto head = [&kernel, p](double u) {
    const double l = kernel.slowly_varying_unchecked(std::pow(u, p));
    return p * l * l;
  };
  return quad::finite(head, 0.0, 1.0, 1e-13) + tail_product_integral(kernel, 0.0);
}

double autocovariance(const Kernel& kernel, double lag) {
  require_integrable(kernel, "autocovariance");
  if (!(lag >= 0.0)) throw std::domain_error("autocovariance: lag must be non-negative");
  if (lag == 0.0) return stationary_variance(kernel);
  double head = 0.0;
  if (lag < 1.0) {
    head = head_product_integral(kernel, lag, 0.0, lag) + head_product_integral(kernel, lag, lag, 1.0);
  } else {
    head = head_product_integral(kernel, lag, 0.0, 1.0);
  }
  return head + tail_product_integral(kernel, lag);
}

double squared_tail_integral(const Kernel& kernel, double from) {
  require_integrable(kernel, "squared_tail_integral");
  if (!(from > 0.0)) throw std::domain_error("squared_tail_integral: lower limit must be positive");
  // x = from / t maps [from, inf) onto (0, 1].
  auto f = [&kernel, from](double t) {
    if (t <= 0.0) return 0.0;
    const double g = g_at_reciprocal(kernel, t / from);
    const double v = g * g * from / (t * t);
    return std::isfinite(v) ? v : 0.0;
  };
  return quad::finite(f, 0.0, 1.0, 1e-13);
}

VariogramAsymptote variogram_asymptote(const Kernel& kernel) {
  const double a = kernel.alpha();
  auto near = [a](double y) {
    const double d = std::pow(y + 1.0, a) - std::pow(y, a);
    return d * d;
  };
  // y = 1/t maps [1, inf) to (0, 1]; (1/t + 1)^a - t^{-a} = t^{-a} ((1 + t)^a - 1).
  auto far = [a](double t) {
    if (t <= 0.0) return 0.0;
    const double d = std::expm1(a * std::log1p(t));
    return std::pow(t, -2.0 * a - 2.0) * d * d;
  };
  const double integral = quad::finite(near, 0.0, 1.0, 1e-13) + quad::finite(far, 0.0, 1.0, 1e-13);
  return {1.0 / (2.0 * a + 1.0) + integral, 2.0 * a + 1.0};
}

}  // namespace bss
