#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "thetaxi/special_functions.hpp"

namespace thetaxi {

namespace {

constexpr int kLeadingTerms = 30;   // direct terms in the Euler-Maclaurin sum
constexpr int kBernoulliTerms = 15; // Bernoulli correction terms

// zeta(n) for integer n >= 4 by direct summation plus a midpoint tail
// integral; only used once per cached Bernoulli entry.
double zeta_direct(int n) {
    if (n == 2) return std::numbers::pi * std::numbers::pi / 6.0;
    double acc = 1.0;
    int j = 2;
    for (; j <= 20000; ++j) {
        const double term = std::pow(double(j), -n);
        acc += term;
        if (term < 1e-19 * acc) break;
    }
    // sum_{k>j} k^{-n} ~ (j+1/2)^{1-n}/(n-1)
    acc += std::pow(double(j) + 0.5, 1.0 - n) / (double(n) - 1.0);
    return acc;
}

}  // namespace

namespace detail {

double bernoulli_scaled(int k) {
    // B_{2k}/(2k)! = 2 (-1)^{k+1} zeta(2k) / (2 pi)^{2k}
    static const std::vector<double> table = [] {
        std::vector<double> t(65, 0.0);
        for (int k = 1; k <= 64; ++k) {
            const double z = zeta_direct(2 * k);
            t[size_t(k)] = 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * z /
                           std::pow(2.0 * std::numbers::pi, 2.0 * k);
        }
        return t;
    }();
    return table.at(size_t(k));
}

double zeta_integer(int n) {
    if (n == 1) throw DomainError("PoleAtOne", "zeta pole at 1");
    if (n == 0) return -0.5;
    if (n >= 2) {
        static const std::vector<double> pos = [] {
            std::vector<double> t(80, 0.0);
            for (int m = 2; m < 80; ++m)
                t[size_t(m)] = zeta_euler_maclaurin(Complex(double(m))).real();
            return t;
        }();
        if (n < int(pos.size())) return pos[size_t(n)];
        return 1.0;
    }
    // zeta(-m): zero at even m, -B_{m+1}/(m+1) at odd m
    const int m = -n;
    if (m % 2 == 0) return 0.0;
    const int k = (m + 1) / 2;  // B_{2k} with 2k = m+1
    double fact = 1.0;          // (2k-1)! so that B_{2k}/(2k) = scaled * (2k-1)!
    for (int j = 2; j <= 2 * k - 1; ++j) fact *= double(j);
    return -bernoulli_scaled(k) * fact;
}

Complex zeta_euler_maclaurin(Complex s) {
    const double n = kLeadingTerms;
    Complex acc = 0.0;
    for (int j = 1; j < kLeadingTerms; ++j) acc += std::exp(-s * std::log(double(j)));
    const Complex npow = std::exp(-s * std::log(n));  // n^{-s}
    acc += n * npow / (s - 1.0);                      // n^{1-s}/(s-1)
    acc += 0.5 * npow;
    // sum_k B_{2k}/(2k)! (s)_{2k-1} n^{-s-2k+1}
    Complex rising = s;          // (s)_{2k-1}, starting at (s)_1
    double scale = 1.0 / (n * n);  // n^{-2k}
    for (int k = 1; k <= kBernoulliTerms; ++k) {
        acc += bernoulli_scaled(k) * rising * npow * n * scale;  // n^{1-s-2k}
        rising *= (s + double(2 * k - 1)) * (s + double(2 * k));
        scale /= n * n;
    }
    return acc;
}

}  // namespace detail

Complex riemann_zeta(Complex s) {
    if (std::abs(s - Complex(1.0)) <= defaults::zeta_pole_radius)
        throw DomainError("PoleAtOne", "zeta pole at 1");
    if (s.real() >= 0.5) return detail::zeta_euler_maclaurin(s);
    if (std::abs(s) <= 1e-14)  // sin(pi s/2) * zeta(1-s) is 0 * inf right here
        return -0.5 - 0.5 * std::log(2.0 * std::numbers::pi) * s;
    // reflection: zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const Complex chi = std::pow(Complex(2.0), s) *
                        std::pow(Complex(std::numbers::pi), s - 1.0) *
                        std::sin(0.5 * std::numbers::pi * s) * gamma_fn(1.0 - s);
    return chi * detail::zeta_euler_maclaurin(1.0 - s);
}

}  // namespace thetaxi
