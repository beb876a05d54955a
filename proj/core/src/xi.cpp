#include <cmath>
#include <numbers>

#include "thetaxi/quadrature.hpp"
#include "thetaxi/special_functions.hpp"

namespace thetaxi {

namespace {

// theta(it) - 1 = 2 sum_{n>=1} e^{-pi n^2 t} for t > 0; converges in a
// handful of terms for t >= 1
double theta_it_minus_one(double t) {
    double acc = 0.0;
    for (int n = 1; n <= 40; ++n) {
        const double term = std::exp(-std::numbers::pi * double(n) * double(n) * t);
        acc += 2.0 * term;
        if (term < 1e-20 * (1.0 + acc)) break;
    }
    return acc;
}

// termwise tail: int_T^inf (theta(it)-1) t^{w-1} dt
//              = 2 sum_n (pi n^2)^{-w} Gamma(w, pi n^2 T)
Complex theta_tail(Complex w, double T) {
    Complex acc = 0.0;
    for (int n = 1; n <= 40; ++n) {
        const double a = std::numbers::pi * double(n) * double(n);
        if (a * T > 745.0) break;
        const Complex term =
            2.0 * std::exp(-w * std::log(a)) * upper_incomplete_gamma(w, a * T);
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc)) break;
    }
    return acc;
}

// int_T^inf (theta(it)-1) t^{w-1} dt by quadrature up to T+8, termwise beyond
Complex theta_mellin_from(Complex w, double T, const QuadratureConfig& cfg, double& err) {
    const double cut = T + 8.0;
    const QuadratureResult q = integrate_adaptive(
        [&](double t) { return theta_it_minus_one(t) * std::exp((w - 1.0) * std::log(t)); },
        T, cut, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
    err += q.err_estimate;
    return q.value + theta_tail(w, cut);
}

}  // namespace

Complex xi_completed(Complex s) {
    if (std::abs(s) <= defaults::zeta_pole_radius ||
        std::abs(s - Complex(1.0)) <= defaults::zeta_pole_radius)
        return 0.5;  // removable points, analytically known
    if (s.real() < 0.0) return xi_completed(1.0 - s);  // dodges Gamma(s/2) poles
    return s * (s - 1.0) * 0.5 * std::pow(Complex(std::numbers::pi), -s / 2.0) *
           gamma_fn(s / 2.0) * riemann_zeta(s);
}

Complex xi_via_theta(Complex s, double t0, const QuadratureConfig& cfg,
                     double* err_estimate) {
    if (!(t0 > 0.0)) throw DomainError("InvalidInterval", "t0 must be positive");
    if (std::abs(s) <= 1e-10 || std::abs(s - Complex(0.25)) <= 1e-10)
        throw DomainError("PrefactorSingular",
                          "prefactor s(2s-1)/2 is not invertible here");

    double err = 0.0;
    // int_{t0}^inf (theta(it) - 1) t^{s-1} dt
    const Complex upper = theta_mellin_from(s, t0, cfg, err);
    // int_0^{t0} (theta(it) - 1/sqrt t) t^{s-1} dt; under t -> 1/t this is the
    // same Mellin integral at weight 1/2 - s from 1/t0
    const Complex lower = theta_mellin_from(0.5 - s, 1.0 / t0, cfg, err);

    const Complex prefactor = s * (2.0 * s - 1.0) * 0.5;
    // the boundary terms are folded into the prefactor so that the removable
    // points of the bracket form never appear:
    //   pref * (-t0^s / s)           = -(2s-1)/2 t0^s
    //   pref * t0^{s-1/2} / (s-1/2)  = s t0^{s-1/2}
    const Complex value = prefactor * (upper + lower) -
                          (s - 0.5) * std::exp(s * std::log(t0)) +
                          s * std::exp((s - 0.5) * std::log(t0));
    if (err_estimate) *err_estimate = std::abs(prefactor) * err;
    return value;
}

}  // namespace thetaxi
