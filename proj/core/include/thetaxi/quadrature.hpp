#pragma once

#include <functional>
#include <vector>

#include "thetaxi/types.hpp"

namespace thetaxi {

enum class TailMode {
    /// Truncate the infinite tail at a T where the analytic bound on the
    /// remainder drops below the absolute tolerance.
    bound_truncation,
    /// Expand the integrand geometrically in j(z)/j(it) and integrate the
    /// resulting exponential series termwise against upper incomplete gammas.
    termwise_gamma,
};

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    double t0 = 1.0;
    int max_subdivisions = 2000;
    TailMode tail_mode = TailMode::bound_truncation;
    double pole_guard = defaults::pole_guard;  // relative guard on |j(it)-j(z)|
};

struct SegmentInfo {
    double lo = 0.0;
    double hi = 0.0;  // infinity() marks an analytic tail entry
    Complex contribution{0.0, 0.0};
    double err = 0.0;
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    std::vector<SegmentInfo> segments;
};

/// Adaptive Gauss7/Kronrod15 integration of a complex-valued integrand over
/// the finite interval [a, b]. Bisects the leaf with the largest error until
/// sum(err) <= max(abs_tol, rel_tol * |value|) or max_subdivisions leaves
/// exist (then throws ToleranceError "ToleranceNotMet").
QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f,
                                    double a, double b,
                                    double abs_tol, double rel_tol,
                                    int max_subdivisions);

}  // namespace thetaxi
