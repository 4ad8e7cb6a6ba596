#include "bss/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace bss::specfun {

namespace {

constexpr double kSeriesCutoff = 0.9;

double hyp2f1_series(double alpha, double z) {
  // t_{k+1} / t_k = (k - alpha)(k + 1) z / ((k + alpha + 2)(k + 1))
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 10000; ++k) {
    term *= (k - alpha) / (k + alpha + 2.0) * z;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw std::runtime_error("hyp2f1_special: series did not converge");
}

double hyp2f1_euler_integral(double alpha, double z) {
  thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
  // (alpha + 1) int_0^1 (1 - y)^alpha (1 - z y)^alpha dy.
  // xc is the signed distance to the nearer endpoint; using it for 1 - y
  // keeps full precision where both factors vanish together at z = 1.
  auto integrand = [alpha, z](double y, double xc) {
    const double one_minus_y = y > 0.5 ? xc : 1.0 - y;
    const double one_minus_zy = one_minus_y + (1.0 - z) * y;
    return std::pow(one_minus_y, alpha) * std::pow(one_minus_zy, alpha);
  };
  double error = 0.0;
  const double value = rule.integrate(integrand, 0.0, 1.0, 1e-14, &error);
  return (alpha + 1.0) * value;
}

// B_{2j} / (2j)! for j = 1..8.
constexpr std::array<double, 8> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};

}  // namespace

double hyp2f1_special(double alpha, double z) {
  if (!(alpha > -0.5 && alpha < 0.5) || alpha == 0.0) {
    throw std::domain_error("hyp2f1_special: alpha must lie in (-1/2, 1/2) \\ {0}");
  }
  if (!(z >= 0.0 && z <= 1.0)) {
    throw std::domain_error("hyp2f1_special: z must lie in [0, 1]");
  }
  if (z <= kSeriesCutoff) return hyp2f1_series(alpha, z);
  return hyp2f1_euler_integral(alpha, z);
}

double hurwitz_zeta(double x, double s) {
  if (!(x > 1.0)) throw std::domain_error("hurwitz_zeta: x must exceed 1");
  if (!(s > 0.0)) throw std::domain_error("hurwitz_zeta: s must be positive");

  // Ten terms summed directly, then Euler-Maclaurin from a = s + 10 with
  // eight Bernoulli corrections.
  constexpr int kDirect = 10;
  double head = 0.0;
  for (int k = kDirect - 1; k >= 0; --k) head += std::pow(k + s, -x);

  const double a = s + kDirect;
  const double a_pow = std::pow(a, -x);
  double tail = a * a_pow / (x - 1.0) + 0.5 * a_pow;

  // rising = x (x+1) ... (x + 2j - 2), power = a^{-x-2j+1}
  double rising = x;
  double power = a_pow / a;
  const double inv_a2 = 1.0 / (a * a);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    tail += kBernoulliOverFactorial[j] * rising * power;
    const double m = 2.0 * static_cast<double>(j) + 1.0;
    rising *= (x + m) * (x + m + 1.0);
    power *= inv_a2;
  }
  return head + tail;
}

}  // namespace bss::specfun
