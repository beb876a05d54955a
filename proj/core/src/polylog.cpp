#include <cmath>
#include <numbers>

#include "thetaxi/special_functions.hpp"

namespace thetaxi {

Complex polylog_unit_circle(int ell, double x, double x_exclusion) {
    if (ell < 1) throw DomainError("InvalidOrder", "polylog order must be >= 1");

    // the series is 2-periodic in x; reduce to (-1, 1]
    double xr = std::remainder(x, 2.0);
    if (xr <= -1.0) xr += 2.0;
    if (std::abs(xr) < x_exclusion)
        throw DomainError("PolylogOnSingularity",
                          "x too close to an even integer (w = 1)");

    const Complex mu(0.0, std::numbers::pi * xr);  // w = e^mu
    if (ell == 1) return -std::log(1.0 - std::exp(mu));

    // Li_ell(e^mu) = sum_{k>=0, k != ell-1} zeta(ell-k) mu^k / k!
    //             + mu^{ell-1}/(ell-1)! (H_{ell-1} - log(-mu)),   |mu| < 2 pi.
    // Terms shrink like (|mu|/2pi)^k <= 2^{-k}.
    double harmonic = 0.0;
    for (int j = 1; j <= ell - 1; ++j) harmonic += 1.0 / j;

    Complex acc = 0.0;
    Complex mu_pow = 1.0;  // mu^k / k!
    for (int k = 0; k <= 120; ++k) {
        if (k == ell - 1) {
            acc += mu_pow * (harmonic - std::log(-mu));
        } else {
            const double zk = detail::zeta_integer(ell - k);
            acc += zk * mu_pow;
            // zeta vanishes at the negative even integers; only a small
            // *nonzero* term signals convergence
            if (zk != 0.0 && k > ell + 4 &&
                std::abs(zk) * std::abs(mu_pow) < 1e-18 * std::abs(acc))
                break;
        }
        mu_pow *= mu / double(k + 1);
    }
    return acc;
}

}  // namespace thetaxi
