#include "oracles.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

double gk(const std::function<double(double)>& f, double a, double b, double tol) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 18, tol);
}

double de(const std::function<double(double)>& f, double a, double b, double tol) {
  thread_local boost::math::quadrature::tanh_sinh<double> rule(12);
  const double edge = 1e-9 * (b - a);
  auto g = [&](double x) {
    const double v = f(x);
    return std::isfinite(v) || (x - a > edge && b - x > edge) ? v : 0.0;
  };
  return rule.integrate(g, a, b, tol);
}

double hyp2f1(double alpha, double z) {
  if (z == 1.0) {
    // Gauss summation.
    return std::tgamma(alpha + 2.0) * std::tgamma(2.0 * alpha + 1.0) /
           (std::tgamma(2.0 * alpha + 2.0) * std::tgamma(alpha + 1.0));
  }
  // int_0^a (a - x)^alpha (b - x)^alpha dx = a^{alpha+1} b^alpha / (alpha+1) F(a/b)
  // with b = 1, a = z, written in t = (a - x) / a.
  auto f = [=](double t) { return std::pow(t, alpha) * std::pow(1.0 - z + z * t, alpha); };
  return (alpha + 1.0) * de(f, 0.0, 1.0, 1e-14);
}

double innovation_entry(double alpha, double dt, std::size_t j, std::size_t k) {
  // u = dt w^q with q = 1 / (1 + e), e the total power of u at 0. The cell-1
  // factors u^alpha and the Jacobian then combine to the constant
  // q dt^{1 + e}, leaving only the bounded factors of later cells.
  const double e = alpha * static_cast<double>((j == 1) + (k == 1));
  const double q = 1.0 / (1.0 + e);
  auto regular = [=](std::size_t idx, double u) {
    if (idx <= 1) return 1.0;
    return std::pow(static_cast<double>(idx - 1) * dt + u, alpha);
  };
  auto f = [&](double w) {
    const double u = dt * std::pow(w, q);
    return regular(j, u) * regular(k, u);
  };
  return q * std::pow(dt, 1.0 + e) * de(f, 0.0, 1.0);
}

double power_covariance(double alpha, double scale, double s, double t) {
  if (s == 0.0) return 0.0;
  // v = s - u puts the singularity at v = 0, where v is represented exactly.
  return scale * scale * de([=](double v) { return std::pow(v, alpha) * std::pow(t - s + v, alpha); }, 0.0, s);
}

double j_bruteforce(double alpha, std::size_t kappa, bss::EvaluationRule rule, std::size_t cells) {
  double sum = 0.0;
  for (std::size_t k = cells; k >= kappa + 1; --k) {
    const double b = bss::evaluation_point(rule, alpha, k);
    const double level = std::pow(b, alpha);
    auto f = [=](double y) {
      const double d = std::pow(y, alpha) - level;
      return d * d;
    };
    const double lo = static_cast<double>(k - 1);
    sum += k == 1 ? de(f, lo, 1.0) : boost::math::quadrature::gauss<double, 30>::integrate(f, lo, lo + 1.0);
  }
  const double c = rule == bss::EvaluationRule::Forward ? alpha * alpha / 3.0 : alpha * alpha / 12.0;
  const double n = static_cast<double>(cells);
  return sum + c * std::pow(n, 2.0 * alpha - 1.0) / (1.0 - 2.0 * alpha);
}

double golden_section(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> riemann_forward_sum(const bss::Kernel& g, double dt, std::size_t steps, std::size_t truncation,
                                        std::span<const double> increments) {
  std::vector<double> out(steps + 1, 0.0);
  for (std::size_t i = 0; i <= steps; ++i) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= truncation; ++k) {
      acc += g(static_cast<double>(k) * dt) * increments[i + truncation - k];
    }
    out[i] = acc;
  }
  return out;
}

Moments moments(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  return {mean, m2 * n / (n - 1.0), m3 / std::pow(m2, 1.5), m4 / (m2 * m2) - 3.0};
}

double slope(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace oracle
