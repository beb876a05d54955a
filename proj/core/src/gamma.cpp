#include <array>
#include <cmath>
#include <numbers>

#include "thetaxi/special_functions.hpp"

namespace thetaxi {

namespace {

// Lanczos coefficients for g = 607/128, 15 terms (Godfrey's set); good to
// ~1e-15 relative in double precision.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex lanczos_gamma(Complex s) {
    // valid for Re(s) >= 1/2
    Complex acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (s - 1.0 + double(k));
    const Complex t = s + (kLanczosG - 0.5);
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, s - 0.5) * std::exp(-t) * acc;
}

}  // namespace

Complex rising_factorial(Complex a, int n) {
    Complex r = 1.0;
    for (int j = 0; j < n; ++j) r *= a + double(j);
    return r;
}

Complex gamma_fn(Complex s) {
    const double nearest = std::round(s.real());
    if (nearest <= 0.0 && std::abs(s - Complex(nearest)) <= defaults::gamma_pole_radius)
        throw DomainError("PoleAtNonPositiveInteger",
                          "gamma pole at nonpositive integer");
    if (s.real() >= 0.5) return lanczos_gamma(s);
    // reflection; sin(pi s) never vanishes here since the poles were screened
    const Complex sinpis = std::sin(std::numbers::pi * s);
    return std::numbers::pi / (sinpis * lanczos_gamma(1.0 - s));
}

}  // namespace thetaxi
