#pragma once

#include "thetaxi/types.hpp"

namespace thetaxi {

/// theta(tau) = sum_{n in Z} e^{pi i n^2 tau}, truncated at the explicit
/// geometric-tail bound for the configured digit target. For v < 0.2 the
/// value is routed through theta(tau) = (-i tau)^{-1/2} theta(-1/tau)
/// whenever the inverted point sits higher in the upper half plane.
Complex theta(const UpperHalfPoint& tau);

/// theta_2(tau) = sum_{n in Z} e^{pi i (n+1/2)^2 tau}.
Complex theta2(const UpperHalfPoint& tau);

/// Modular lambda = theta_2(tau)^4 / theta(tau)^4.
Complex lambda_modular(const UpperHalfPoint& tau);

/// Hauptmodul j_theta = 1 / (lambda (1 - lambda)); S-invariant, so small v is
/// evaluated at -1/tau. Throws DomainError "NumericalDegeneracy" when the
/// denominator degenerates in double precision.
Complex j_theta(const UpperHalfPoint& tau);

/// H_z(tau) = j_theta(z) theta(tau) / (j_theta(tau) - j_theta(z)).
/// Throws DomainError "NearPole" when |j(tau) - j(z)| <= pole_guard (1+|j(z)|).
Complex h_z(const PolePoint& z, const UpperHalfPoint& tau,
            double pole_guard = defaults::pole_guard);

/// Membership test for the theta group: det = 1, a = d (mod 2), b = c (mod 2).
/// Throws DomainError "NotUnimodular" if det != 1.
bool in_theta_group(const IntegerMatrix2x2& m);

struct ReductionResult {
    UpperHalfPoint point;  // representative with |Re| <= 1, |tau| >= 1
    IntegerMatrix2x2 map;  // element of the theta group with point = map(z)
};

/// Reduce z into the fundamental domain {|Re tau| <= 1, |tau| >= 1} of the
/// theta group by alternating x-shifts (T^{+-2}) and inversions (S).
/// Boundary ties resolve toward Re >= 0 and |tau| >= 1. Throws DomainError
/// "ReductionStalled" after 10^4 iterations.
ReductionResult reduce_to_fundamental_domain(const PolePoint& z);

/// |Re| of the reduced representative; 0 (within reduction tolerance) exactly
/// when z is theta-group-equivalent to a point of the positive imaginary axis.
double axis_margin(const PolePoint& z);

}  // namespace thetaxi
