#pragma once

#include <functional>
#include <utility>

#include <boost/math/quadrature/gauss.hpp>

// Thin wrappers over Boost.Math quadrature. Everything that integrates a
// kernel goes through here so tolerances are set in one place.

namespace bss::quad {

using Integrand = std::function<double(double)>;

/// Integral over a finite interval; tolerates integrable endpoint
/// singularities (double-exponential rule).
double finite(const Integrand& f, double a, double b, double rel_tol = 1e-12);

/// Integral over [a, inf) for integrands decaying at least algebraically
/// faster than 1/x. Uses exp-sinh; callers with slow algebraic decay should
/// map the tail to a finite interval instead.
double semi_infinite(const Integrand& f, double a, double rel_tol = 1e-12);

/// Fixed-order Gauss-Legendre rule (20 nodes) on [a, b] for smooth pieces.
template <class F>
double gauss_legendre(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 20>::integrate(std::forward<F>(f), a, b);
}

}  // namespace bss::quad
