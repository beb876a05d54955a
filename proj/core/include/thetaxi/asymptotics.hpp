#pragma once

#include <span>
#include <vector>

#include "thetaxi/mellin.hpp"
#include "thetaxi/types.hpp"

namespace thetaxi {

/// Correction coefficient in its summary form:
///   ell = 0:  1/s
///   ell >= 1: (1/pi) [ (s+1-ell)_{ell-1} Li_ell(e^{-pi i x})
///                      - (1-s)_{ell-1}   Li_ell(e^{-pi i x}) ],
/// both polylogarithms taken at e^{-pi i x} exactly as the summary states
/// (see proposition_corrections for the form the expansion actually uses).
/// Identically zero for ell = 1.
Complex correction_C(int ell, SpectralParameter s, double x);

/// D_{ell,s}(x) = C_{ell,1/2-s}(x).
Complex correction_D(int ell, SpectralParameter s, double x);

/// Additive corrections to F_z(s), collected per power of y = Im(z):
///   + (1/2-s) y^s + s y^{1/2-s}
///   - s(1/2-s) sum_{l=1}^{floor(sigma)}    (1-s)_{l-1}   pi^{-l} Li_l(e^{ pi i x}) y^{s-l}
///   + s(1/2-s) sum_{l=1}^{floor(sigma)}    (s+1-l)_{l-1} pi^{-l} Li_l(e^{-pi i x}) y^{s-l}
///   - s(1/2-s) sum_{l=1}^{floor(1/2-sigma)} (s+1/2)_{l-1} pi^{-l} Li_l(e^{ pi i x}) y^{1/2-s-l}
///   + s(1/2-s) sum_{l=1}^{floor(1/2-sigma)} (3/2-s-l)_{l-1} pi^{-l} Li_l(e^{-pi i x}) y^{1/2-s-l}
struct CorrectionExpansion {
    double x = 0.0;
    SpectralParameter s{0.0};
    Complex y_s_coeff{0.0, 0.0};             // multiplies y^s
    Complex y_half_minus_s_coeff{0.0, 0.0};  // multiplies y^{1/2-s}
    std::vector<Complex> cl_terms;           // l-th entry multiplies y^{s-l}, l = 1..floor(sigma)
    std::vector<Complex> dl_terms;           // l-th entry multiplies y^{1/2-s-l}

    Complex evaluate(double y) const;
};

/// Builds the expansion above. Requires x = Re(z) off the integers by
/// x_exclusion and Re(s) at least sigma_exclusion away from integers and
/// half-integers (DomainError "UnstableCutoff" otherwise: the floor cutoffs
/// jump there).
CorrectionExpansion proposition_corrections(const PolePoint& z, SpectralParameter s);

/// F_z(s) plus all corrections, converging to xi(2s) as Im(z) -> infinity.
Complex corrected_f_z(const PolePoint& z, SpectralParameter s,
                      const QuadratureConfig& cfg = {});

struct ConvergenceRow {
    double y = 0.0;
    Complex corrected{0.0, 0.0};
    double error = 0.0;  // |corrected - xi(2s)|
};

struct ConvergenceTable {
    Complex xi_target{0.0, 0.0};
    std::vector<ConvergenceRow> rows;
    bool monotone = true;  // error strictly decreasing down the table
};

/// Runs corrected_f_z at z = x + iy over the (strictly increasing) y values
/// and tabulates the distance to xi(2s).
ConvergenceTable convergence_study(double x, SpectralParameter s,
                                   std::span<const double> y_values,
                                   const QuadratureConfig& cfg = {});

}  // namespace thetaxi
