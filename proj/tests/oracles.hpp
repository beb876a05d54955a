#pragma once

// Test-only oracles, independent of the library's evaluation paths.

#include <cmath>
#include <complex>
#include <functional>

namespace oracles {

using Complex = std::complex<double>;

namespace detail {

inline Complex simpson_rule(double a, double b, Complex fa, Complex fm, Complex fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline Complex simpson_rec(const std::function<Complex(double)>& f, double a,
                           double b, Complex fa, Complex fm, Complex fb,
                           Complex whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const Complex flm = f(lm), frm = f(rm);
    const Complex left = simpson_rule(a, m, fa, flm, fm);
    const Complex right = simpson_rule(m, b, fm, frm, fb);
    const Complex delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature (complex integrand, finite interval).
inline Complex simpson(const std::function<Complex(double)>& f, double a,
                       double b, double tol = 1e-12, int depth = 40) {
    const Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const Complex whole = detail::simpson_rule(a, b, fa, fm, fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

/// Direct theta series sum_{|n| <= terms} e^{pi i n^2 tau}.
inline Complex theta_series_direct(Complex tau, int terms = 50) {
    Complex acc = 1.0;
    for (int n = 1; n <= terms; ++n)
        acc += 2.0 * std::exp(Complex(0.0, M_PI) * (double(n) * double(n)) * tau);
    return acc;
}

/// Direct theta_2 series.
inline Complex theta2_series_direct(Complex tau, int terms = 50) {
    Complex acc = 0.0;
    for (int n = 0; n <= terms; ++n) {
        const double h = double(n) + 0.5;
        acc += 2.0 * std::exp(Complex(0.0, M_PI) * (h * h) * tau);
    }
    return acc;
}

/// zeta(2) by direct series with a midpoint tail integral.
inline double zeta2_series(long terms = 20000000) {
    double acc = 0.0;
    for (long n = terms; n >= 1; --n) acc += 1.0 / (double(n) * double(n));
    return acc + 1.0 / (double(terms) + 0.5);
}

/// Li_2(-1) = sum (-1)^n / n^2 with partial-sum averaging.
inline double alternating_li2(long terms = 100000) {
    double s = 0.0;
    for (long n = 1; n < terms; ++n) s += ((n % 2) ? -1.0 : 1.0) / (double(n) * double(n));
    const double s_next = s + ((terms % 2) ? -1.0 : 1.0) / (double(terms) * double(terms));
    return 0.5 * (s + s_next);
}

/// Kummer series for 1F1(s; s+1; y): sum_n s/(s+n) y^n/n!.
inline Complex hyp1f1_series(Complex s, double y) {
    Complex acc = 1.0;
    double term = 1.0;  // y^n / n!
    for (int n = 1; n <= 2000; ++n) {
        term *= y / double(n);
        const Complex piece = s / (s + double(n)) * term;
        acc += piece;
        if (std::abs(piece) < 1e-18 * std::abs(acc) && double(n) > y) break;
    }
    return acc;
}

}  // namespace oracles
