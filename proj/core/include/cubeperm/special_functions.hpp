#pragma once

namespace cubeperm {

/// Hurwitz zeta sum_{k>=0} (k+q)^{-s} for real s > 1, q > 0, by
/// Euler-Maclaurin summation with a shift of 16 terms.
double hurwitz_zeta(double s, double q);

/// Riemann zeta for real s > 1, absolute error <= 1e-12 away from the pole.
double zeta_real(double s);

/// Gamma for real x (not a non-positive integer), Lanczos g = 7, n = 9.
double gamma_lanczos(double x);

/// E_1(x) = int_x^inf e^{-t}/t dt, x > 0.
double exponential_integral_e1(double x);

}  // namespace cubeperm
