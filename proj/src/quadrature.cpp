#include "bss/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace bss::quad {

namespace {

// Boost 1.74 only offers non-const integrate(), hence one rule per thread.
boost::math::quadrature::tanh_sinh<double>& tanh_sinh_rule() {
  thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
  return rule;
}

boost::math::quadrature::exp_sinh<double>& exp_sinh_rule() {
  thread_local boost::math::quadrature::exp_sinh<double> rule(12);
  return rule;
}

}  // namespace

double finite(const Integrand& f, double a, double b, double rel_tol) {
  if (!(b > a)) {
    if (a == b) return 0.0;
    throw std::invalid_argument("quad::finite: empty or reversed interval");
  }
  double error = 0.0;
  double l1 = 0.0;
  // The rule samples within a few ulps of the endpoints, where integrable
  // singularities can overflow; those samples carry no weight.
  const double edge = 1e-9 * (b - a);
  auto g = [&f, a, b, edge](double x) {
    const double v = f(x);
    if (std::isfinite(v)) return v;
    if (x - a < edge || b - x < edge) return 0.0;
    throw std::runtime_error("quad::finite: non-finite integrand inside the interval");
  };
  const double value = tanh_sinh_rule().integrate(g, a, b, rel_tol, &error, &l1);
  if (!std::isfinite(value)) throw std::runtime_error("quad::finite: non-finite result");
  return value;
}

double semi_infinite(const Integrand& f, double a, double rel_tol) {
  double error = 0.0;
  double l1 = 0.0;
  auto g = [&f, a](double u) { return f(a + u); };
  const double value = exp_sinh_rule().integrate(g, rel_tol, &error, &l1);
  if (!std::isfinite(value)) throw std::runtime_error("quad::semi_infinite: non-finite result");
  return value;
}

}  // namespace bss::quad
