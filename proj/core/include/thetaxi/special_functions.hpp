#pragma once

#include "thetaxi/quadrature.hpp"
#include "thetaxi/types.hpp"

namespace thetaxi {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); empty product for n = 0.
Complex rising_factorial(Complex a, int n);

/// Gamma function, Lanczos approximation with reflection for Re(s) < 1/2.
/// Throws DomainError "PoleAtNonPositiveInteger" within 1e-14 of 0, -1, -2, ...
Complex gamma_fn(Complex s);

/// Upper incomplete gamma Gamma(s, y) = int_y^inf t^{s-1} e^{-t} dt for y > 0.
/// Continued fraction for y >= |s| + 4, series complement otherwise. When
/// e^{-y} underflows, returns exactly 0 and sets *underflow if given.
Complex upper_incomplete_gamma(Complex s, double y, bool* underflow = nullptr);

/// Partial asymptotic expansion
///   y^{s-1} e^{-y} sum_{j=0}^{N-1} (-1)^j (1-s)_j / y^j,   y >= 1.
Complex incomplete_gamma_asymptotic(Complex s, double y, AsymptoticOrder order);

/// Asymptotic approximant (s e^y / y) sum_{j=0}^{N} (1-s)_j / y^j to
/// 1F1(s; s+1; y). Requires s at least 1e-10 away from integers
/// (DomainError "NonGenericParameter" otherwise) and y >= 1.
Complex confluent_1f1_asymptotic(Complex s, double y, AsymptoticOrder order);

/// Li_ell(e^{pi i x}) = sum_{n>=1} e^{pi i n x} / n^ell for ell >= 1.
/// Closed-form logarithm for ell = 1. Throws DomainError
/// "PolylogOnSingularity" when x lies within x_exclusion of an even integer
/// (w = 1, where Li_1 diverges).
Complex polylog_unit_circle(int ell, double x,
                            double x_exclusion = defaults::x_exclusion);

/// Riemann zeta via Euler-Maclaurin (Re(s) >= 1/2) and reflection otherwise.
/// Throws DomainError "PoleAtOne" within 1e-12 of s = 1.
Complex riemann_zeta(Complex s);

/// Completed xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s). The removable
/// points s = 0, 1 return the limit value 1/2. For Re(s) < 0 the reflection
/// xi(s) = xi(1-s) is used, so the gamma poles at negative even integers
/// never appear.
Complex xi_completed(Complex s);

/// xi(2s) recovered from the theta integral representation
///   xi(2s) = s(2s-1)/2 [ int_{t0}^inf (theta(it)-1) t^{s-1} dt
///          + int_0^{t0} (theta(it)-1/sqrt t) t^{s-1} dt ]
///          - (2s-1)/2 t0^s + s t0^{s-1/2},
/// valid for every t0 > 0. Finite ranges use the adaptive quadrature engine,
/// tails are summed termwise against upper incomplete gammas. Throws
/// DomainError "PrefactorSingular" within 1e-10 of s = 0 or s = 1/4.
Complex xi_via_theta(Complex s, double t0, const QuadratureConfig& cfg = {},
                     double* err_estimate = nullptr);

namespace detail {

/// B_{2k} / (2k)!  (k >= 1), the scaled Bernoulli numbers.
double bernoulli_scaled(int k);

/// zeta at integer arguments n != 1; exact values at n <= 0.
double zeta_integer(int n);

/// Euler-Maclaurin evaluation, usable on both sides of the critical line
/// (exposed for functional-equation tests).
Complex zeta_euler_maclaurin(Complex s);

}  // namespace detail

}  // namespace thetaxi
