#pragma once

// Special functions needed by the innovation covariance and the asymptotic
// MSE series. Only the parameter patterns used by the simulator are covered.

namespace bss::specfun {

/// Gauss hypergeometric function 2F1(-alpha, 1; alpha + 2; z) for
/// alpha in (-1/2, 1/2) \ {0} and z in [0, 1].
///
/// Power series for z <= 0.9, Euler integral representation above that.
/// The value at z = 1 is finite because 2 alpha + 1 > 0.
/// Throws std::domain_error outside the admissible region.
double hyp2f1_special(double alpha, double z);

/// Hurwitz zeta function sum_{k>=0} (k + s)^(-x), x > 1, s > 0.
/// Throws std::domain_error for x <= 1 or s <= 0.
double hurwitz_zeta(double x, double s);

}  // namespace bss::specfun
