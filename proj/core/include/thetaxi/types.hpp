#pragma once

#include <complex>
#include <cstdint>

#include "thetaxi/errors.hpp"

namespace thetaxi {

using Complex = std::complex<double>;

namespace defaults {

/// Decimal digits D targeted by the theta-series truncation bound.
inline constexpr int theta_digits = 13;
/// Below this imaginary part, theta/lambda/j are routed through inversion.
inline constexpr double small_v = 0.2;
/// Exclusion radius around integers for the polylog argument x and for the
/// axis-distance precondition of the Mellin transform.
inline constexpr double x_exclusion = 1e-6;
/// Exclusion radius around integers for the confluent 1F1 parameter.
inline constexpr double f1_integer_exclusion = 1e-10;
/// Relative guard on |j(tau) - j(z)| before the pole of H_z is declared hit.
inline constexpr double pole_guard = 1e-8;
/// Radius around s = 1 treated as the zeta pole.
inline constexpr double zeta_pole_radius = 1e-12;
/// Radius around nonpositive integers treated as gamma poles.
inline constexpr double gamma_pole_radius = 1e-14;
/// Exclusion radius around integers/half-integers of Re(s) where the floor
/// cutoffs of the correction expansion jump.
inline constexpr double sigma_exclusion = 1e-3;
/// Largest admissible asymptotic expansion order.
inline constexpr int max_asymptotic_order = 30;

}  // namespace defaults

/// tau = u + iv with v > 0.
struct UpperHalfPoint {
    double u = 0.0;
    double v = 1.0;

    UpperHalfPoint() = default;
    UpperHalfPoint(double u_, double v_) : u(u_), v(v_) {
        if (!(v > 0.0))
            throw DomainError("NotInUpperHalfPlane", "tau must satisfy Im(tau) > 0");
    }
    explicit UpperHalfPoint(Complex tau) : UpperHalfPoint(tau.real(), tau.imag()) {}

    Complex tau() const { return {u, v}; }
    /// q = e^{2 pi i tau}, |q| < 1.
    Complex q() const;
};

/// Location z = x + iy of the simple pole of H_z.
struct PolePoint {
    double x = 0.0;
    double y = 1.0;

    PolePoint() = default;
    PolePoint(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0))
            throw DomainError("NotInUpperHalfPlane", "z must satisfy Im(z) > 0");
    }
    explicit PolePoint(Complex z_) : PolePoint(z_.real(), z_.imag()) {}

    Complex z() const { return {x, y}; }
    UpperHalfPoint as_tau() const { return {x, y}; }
};

/// s = sigma + it, sigma := Re(s).
struct SpectralParameter {
    Complex s;

    SpectralParameter(Complex s_) : s(s_) {}       // NOLINT(google-explicit-constructor)
    SpectralParameter(double sigma) : s(sigma) {}  // NOLINT(google-explicit-constructor)

    double sigma() const { return s.real(); }
};

/// Unimodular integer matrix [[a,b],[c,d]].
struct IntegerMatrix2x2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

    IntegerMatrix2x2 operator*(const IntegerMatrix2x2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    /// Moebius action on the upper half plane.
    Complex apply(Complex tau) const {
        return (Complex(double(a)) * tau + double(b)) / (Complex(double(c)) * tau + double(d));
    }
    bool operator==(const IntegerMatrix2x2&) const = default;
};

/// Number of terms N >= 0 kept in an asymptotic expansion.
struct AsymptoticOrder {
    int n = 0;

    AsymptoticOrder(int n_) : n(n_) {  // NOLINT(google-explicit-constructor)
        if (n < 0 || n > defaults::max_asymptotic_order)
            throw DomainError("InvalidOrder", "asymptotic order out of range");
    }
};

}  // namespace thetaxi
