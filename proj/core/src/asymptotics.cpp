#include <cmath>
#include <numbers>

#include "thetaxi/asymptotics.hpp"
#include "thetaxi/special_functions.hpp"

namespace thetaxi {

namespace {

Complex pow_y(double y, Complex e) { return std::exp(e * std::log(y)); }

void require_sigma_off_cutoffs(double sigma) {
    const double d_int = std::abs(sigma - std::round(sigma));
    const double d_half = std::abs(2.0 * sigma - std::round(2.0 * sigma)) / 2.0;
    if (std::min(d_int, d_half) < defaults::sigma_exclusion)
        throw DomainError("UnstableCutoff",
                          "Re(s) too close to a jump of the floor cutoffs");
}

}  // namespace

Complex correction_C(int ell, SpectralParameter s, double x) {
    if (ell < 0) throw DomainError("InvalidOrder", "correction index must be >= 0");
    if (ell == 0) {
        if (std::abs(s.s) < 1e-14)
            throw DomainError("PrefactorSingular", "C_{0,s} has a pole at s = 0");
        return 1.0 / s.s;
    }
    const Complex li_minus = polylog_unit_circle(ell, -x);
    const Complex bracket =
        rising_factorial(s.s + 1.0 - double(ell), ell - 1) - rising_factorial(1.0 - s.s, ell - 1);
    return bracket * li_minus / std::numbers::pi;
}

Complex correction_D(int ell, SpectralParameter s, double x) {
    return correction_C(ell, SpectralParameter(0.5 - s.s), x);
}

Complex CorrectionExpansion::evaluate(double y) const {
    Complex acc = y_s_coeff * pow_y(y, s.s) + y_half_minus_s_coeff * pow_y(y, 0.5 - s.s);
    for (int l = 1; l <= int(cl_terms.size()); ++l)
        acc += cl_terms[size_t(l - 1)] * pow_y(y, s.s - double(l));
    for (int l = 1; l <= int(dl_terms.size()); ++l)
        acc += dl_terms[size_t(l - 1)] * pow_y(y, 0.5 - s.s - double(l));
    return acc;
}

CorrectionExpansion proposition_corrections(const PolePoint& z, SpectralParameter s) {
    const double x = z.x;
    if (std::abs(x - std::round(x)) <= defaults::x_exclusion)
        throw DomainError("PolylogOnSingularity",
                          "the expansion requires x = Re(z) off the integers");
    require_sigma_off_cutoffs(s.sigma());

    CorrectionExpansion out;
    out.x = x;
    out.s = s;
    out.y_s_coeff = 0.5 - s.s;
    out.y_half_minus_s_coeff = s.s;

    const Complex pref = s.s * (0.5 - s.s);
    const int c_cut = std::max(0, int(std::floor(s.sigma())));
    const int d_cut = std::max(0, int(std::floor(0.5 - s.sigma())));
    const double pi = std::numbers::pi;

    for (int l = 1; l <= c_cut; ++l) {
        const Complex li_plus = polylog_unit_circle(l, x);
        const Complex li_minus = polylog_unit_circle(l, -x);
        const double scale = std::pow(pi, -l);
        out.cl_terms.push_back(pref * scale *
                               (-rising_factorial(1.0 - s.s, l - 1) * li_plus +
                                rising_factorial(s.s + 1.0 - double(l), l - 1) * li_minus));
    }
    for (int l = 1; l <= d_cut; ++l) {
        const Complex li_plus = polylog_unit_circle(l, x);
        const Complex li_minus = polylog_unit_circle(l, -x);
        const double scale = std::pow(pi, -l);
        out.dl_terms.push_back(pref * scale *
                               (-rising_factorial(s.s + 0.5, l - 1) * li_plus +
                                rising_factorial(1.5 - s.s - double(l), l - 1) * li_minus));
    }
    return out;
}

Complex corrected_f_z(const PolePoint& z, SpectralParameter s,
                      const QuadratureConfig& cfg) {
    const CorrectionExpansion corr = proposition_corrections(z, s);
    return f_z(z, s, cfg).value + corr.evaluate(z.y);
}

ConvergenceTable convergence_study(double x, SpectralParameter s,
                                   std::span<const double> y_values,
                                   const QuadratureConfig& cfg) {
    if (y_values.empty())
        throw DomainError("EmptyList", "convergence study needs at least one y");
    for (size_t i = 1; i < y_values.size(); ++i)
        if (!(y_values[i] > y_values[i - 1]))
            throw DomainError("UnsortedList", "y values must be strictly increasing");

    ConvergenceTable table;
    table.xi_target = xi_completed(2.0 * s.s);
    for (const double y : y_values) {
        const Complex value = corrected_f_z(PolePoint(x, y), s, cfg);
        table.rows.push_back({y, value, std::abs(value - table.xi_target)});
    }
    for (size_t i = 1; i < table.rows.size(); ++i)
        if (!(table.rows[i].error < table.rows[i - 1].error)) table.monotone = false;
    return table;
}

}  // namespace thetaxi
