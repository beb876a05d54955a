#include <cmath>
#include <limits>

#include "thetaxi/special_functions.hpp"

namespace thetaxi {

namespace {

// Modified Lentz evaluation of the standard continued fraction
//   Gamma(s,y) = e^{-y} y^s / (y+1-s - 1(1-s)/(y+3-s - 2(2-s)/(...)))
Complex upper_gamma_cf(Complex s, double y) {
    constexpr double tiny = 1e-300;
    Complex b = y + 1.0 - s;
    Complex c = 1.0 / tiny;
    Complex d = (std::abs(b) < tiny) ? Complex(1.0 / tiny) : 1.0 / b;
    Complex h = d;
    for (int i = 1; i <= 200000; ++i) {
        const Complex a = -double(i) * (double(i) - s);
        b += 2.0;
        d = a * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(s * std::log(y) - y) * h;
}

// Lower-gamma series, Gamma(s,y) = Gamma(s) - gamma(s,y)
Complex upper_gamma_series(Complex s, double y) {
    Complex term = 1.0 / s;
    Complex acc = term;
    for (int n = 1; n <= 100000; ++n) {
        term *= y / (s + double(n));
        acc += term;
        if (std::abs(term) < 1e-17 * std::abs(acc)) break;
    }
    const Complex lower = std::exp(s * std::log(y) - y) * acc;
    return gamma_fn(s) - lower;
}

bool near_nonpositive_integer(Complex s, double radius) {
    const double nearest = std::round(s.real());
    return nearest <= 0.0 && std::abs(s - Complex(nearest)) <= radius;
}

}  // namespace

Complex upper_incomplete_gamma(Complex s, double y, bool* underflow) {
    if (underflow) *underflow = false;
    if (!(y > 0.0))
        throw DomainError("NonPositiveArgument", "incomplete gamma needs y > 0");
    if (std::exp(-y) == 0.0) {
        if (underflow) *underflow = true;
        return 0.0;
    }
    // the series complement goes through Gamma(s), unusable near its poles
    if (y >= std::abs(s) + 4.0 || near_nonpositive_integer(s, 1e-8))
        return upper_gamma_cf(s, y);
    return upper_gamma_series(s, y);
}

Complex incomplete_gamma_asymptotic(Complex s, double y, AsymptoticOrder order) {
    if (!(y >= 1.0))
        throw DomainError("ArgumentTooSmall", "asymptotic expansion needs y >= 1");
    Complex sum = 0.0;
    Complex term = 1.0;  // (-1)^j (1-s)_j / y^j at j = 0
    for (int j = 0; j < order.n; ++j) {
        sum += term;
        term *= -(1.0 - s + double(j)) / y;
    }
    return std::exp((s - 1.0) * std::log(y) - y) * sum;
}

Complex confluent_1f1_asymptotic(Complex s, double y, AsymptoticOrder order) {
    const double nearest = std::round(s.real());
    if (std::abs(s - Complex(nearest)) <= defaults::f1_integer_exclusion)
        throw DomainError("NonGenericParameter", "1F1 asymptotics need s off the integers");
    if (!(y >= 1.0))
        throw DomainError("ArgumentTooSmall", "asymptotic expansion needs y >= 1");
    Complex sum = 0.0;
    Complex term = 1.0;  // (1-s)_j / y^j
    for (int j = 0; j <= order.n; ++j) {
        sum += term;
        term *= (1.0 - s + double(j)) / y;
    }
    return s * std::exp(y) / y * sum;
}

}  // namespace thetaxi
