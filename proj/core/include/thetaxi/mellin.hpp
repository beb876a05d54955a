#pragma once

#include <limits>

#include "thetaxi/quadrature.hpp"
#include "thetaxi/types.hpp"

namespace thetaxi {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// j_theta(z) int_{t1}^{t2} theta(it) / (j_theta(it) - j_theta(z)) t^{s-1} dt.
///
/// Requires 0 <= t1 < t2 and axis_margin(z) > x_exclusion (DomainError
/// "AxisPole" otherwise). The sub-range below t = 0.2 is evaluated after the
/// substitution t -> 1/t, which maps it to [5, inf) with weight s -> 1/2 - s
/// and keeps the theta series short; t2 = inf is handled per cfg.tail_mode.
/// Quadrature nodes closer to the pole of H_z than the guard throw
/// DomainError "NearPoleOnPath".
QuadratureResult f_z_segment(const PolePoint& z, SpectralParameter s,
                             double t1, double t2, const QuadratureConfig& cfg);

/// F_z(s) = s(1/2 - s) j_theta(z) int_0^inf theta(it)/(j_theta(it)-j_theta(z))
/// t^{s-1} dt, assembled from the segments [0,1/y], [1/y,t0], [t0,y], [y,inf).
/// Exactly zero (no quadrature) when the prefactor vanishes.
QuadratureResult f_z(const PolePoint& z, SpectralParameter s,
                     const QuadratureConfig& cfg = {});

/// |F_z(s) - F_z(1/2-s)| / (1 + |F_z(s)|).
double functional_equation_residual(const PolePoint& z, SpectralParameter s,
                                    const QuadratureConfig& cfg = {});

}  // namespace thetaxi
