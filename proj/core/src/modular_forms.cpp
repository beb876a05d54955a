#include <cmath>
#include <numbers>

#include "thetaxi/modular_forms.hpp"

namespace thetaxi {

namespace {

// Terms needed so the geometric tail of the theta series stays below the
// digit target: N(v) = ceil(sqrt(2 (D+2) ln10 / (pi v))).
int truncation_terms(double v) {
    const double d = double(defaults::theta_digits);
    const double n = std::ceil(std::sqrt(2.0 * (d + 2.0) * std::numbers::ln10 /
                                         (std::numbers::pi * v)));
    return int(n);
}

Complex theta_series(Complex tau) {
    const int n_max = truncation_terms(tau.imag());
    const Complex q1 = std::exp(Complex(0.0, std::numbers::pi) * tau);  // e^{pi i tau}
    const Complex q2 = q1 * q1;
    Complex acc = 1.0;
    Complex pow_sq = 1.0;  // q1^{n^2}
    Complex step = q1;     // q1^{2n-1}
    for (int n = 1; n <= n_max; ++n) {
        pow_sq *= step;  // q1^{(n-1)^2} * q1^{2n-1} = q1^{n^2}
        step *= q2;
        acc += 2.0 * pow_sq;
    }
    return acc;
}

Complex theta2_series(Complex tau) {
    const int n_max = truncation_terms(tau.imag());
    const Complex q1 = std::exp(Complex(0.0, std::numbers::pi) * tau);
    const Complex q2 = q1 * q1;
    // (n + 1/2)^2 = 1/4 + n(n+1); exponents n(n+1) step by 2(n+1)
    Complex acc = 0.0;
    Complex pow_tri = 1.0;  // q1^{n(n+1)}
    Complex step = q2;      // q1^{2(n+1)}
    for (int n = 0; n <= n_max; ++n) {
        acc += 2.0 * pow_tri;
        pow_tri *= step;
        step *= q2;
    }
    return std::exp(Complex(0.0, 0.25 * std::numbers::pi) * tau) * acc;
}

bool inversion_helps(const UpperHalfPoint& tau) {
    const double norm2 = tau.u * tau.u + tau.v * tau.v;
    return tau.v < defaults::small_v && tau.v / norm2 > tau.v;
}

UpperHalfPoint inverted(const UpperHalfPoint& tau) {
    const Complex m = -1.0 / tau.tau();
    return UpperHalfPoint(m);
}

}  // namespace

Complex UpperHalfPoint::q() const {
    return std::exp(Complex(0.0, 2.0 * std::numbers::pi) * tau());
}

Complex theta(const UpperHalfPoint& tau) {
    if (inversion_helps(tau)) {
        // theta(tau) = (-i tau)^{-1/2} theta(-1/tau); Re(-i tau) = v > 0, so
        // the principal branch never meets its cut
        const Complex root = std::pow(Complex(tau.v, -tau.u), -0.5);
        return root * theta_series(inverted(tau).tau());
    }
    return theta_series(tau.tau());
}

Complex theta2(const UpperHalfPoint& tau) { return theta2_series(tau.tau()); }

Complex lambda_modular(const UpperHalfPoint& tau) {
    if (inversion_helps(tau)) {
        // lambda(tau) = 1 - lambda(-1/tau)
        return 1.0 - lambda_modular(inverted(tau));
    }
    const Complex t3 = theta_series(tau.tau());
    const Complex t3_4 = t3 * t3 * t3 * t3;
    if (t3_4 == Complex(0.0) || !std::isfinite(std::abs(t3_4)))
        throw DomainError("NumericalDegeneracy", "theta^4 degenerated");
    const Complex t2 = theta2_series(tau.tau());
    const Complex t2_4 = t2 * t2 * t2 * t2;
    return t2_4 / t3_4;
}

Complex j_theta(const UpperHalfPoint& tau) {
    if (inversion_helps(tau)) return j_theta(inverted(tau));  // S-invariance
    const Complex l = lambda_modular(tau);
    const Complex den = l * (1.0 - l);
    const Complex j = 1.0 / den;
    if (den == Complex(0.0) || !std::isfinite(std::abs(j)))
        throw DomainError("NumericalDegeneracy", "lambda(1-lambda) degenerated");
    return j;
}

Complex h_z(const PolePoint& z, const UpperHalfPoint& tau, double pole_guard) {
    const Complex jz = j_theta(z.as_tau());
    const Complex jt = j_theta(tau);
    if (std::abs(jt - jz) <= pole_guard * (1.0 + std::abs(jz)))
        throw DomainError("NearPole", "tau too close to the orbit of z");
    return jz * theta(tau) / (jt - jz);
}

}  // namespace thetaxi
