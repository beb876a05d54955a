#include <cmath>
#include <numbers>

#include "qseries.hpp"
#include "thetaxi/mellin.hpp"
#include "thetaxi/modular_forms.hpp"
#include "thetaxi/special_functions.hpp"

namespace thetaxi {

namespace {

// below this t the integrand is evaluated through t -> 1/t
constexpr double kInversionPoint = defaults::small_v;

struct Piece {
    Complex value{0.0, 0.0};
    double err = 0.0;
    std::vector<SegmentInfo> segments;
};

void append(Piece& acc, const QuadratureResult& r) {
    acc.value += r.value;
    acc.err += r.err_estimate;
    acc.segments.insert(acc.segments.end(), r.segments.begin(), r.segments.end());
}

Complex integrand(Complex jz, Complex s, double t, double pole_guard) {
    const UpperHalfPoint it(0.0, t);
    const Complex jt = j_theta(it);
    if (std::abs(jt - jz) <= pole_guard * (1.0 + std::abs(jz)))
        throw DomainError("NearPoleOnPath",
                          "quadrature node too close to the pole of H_z");
    return jz * theta(it) / (jt - jz) * std::exp((s - 1.0) * std::log(t));
}

QuadratureResult quad_finite(Complex jz, Complex s, double a, double b,
                             const QuadratureConfig& cfg) {
    return integrate_adaptive(
        [&](double t) { return integrand(jz, s, t, cfg.pole_guard); }, a, b,
        cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions);
}

// analytic bound on |int_T^inf|: for e^{pi T} >= 1024 (1+|jz|) the integrand
// is below 17.2 |jz| t^{sigma-1} e^{-pi t}
double tail_bound(Complex jz, double sigma, double T) {
    const Complex g = upper_incomplete_gamma(Complex(sigma), std::numbers::pi * T);
    return 17.2 * std::abs(jz) * std::pow(std::numbers::pi, -sigma) * std::abs(g);
}

double geometric_threshold(Complex jz) {
    return std::max(2.0, std::log(1024.0 * (1.0 + std::abs(jz))) / std::numbers::pi);
}

// sum_{m>=1} jz^m int_T^inf theta(it) j(it)^{-m} t^{s-1} dt, each integral
// summed termwise over the exponential series against incomplete gammas
Piece termwise_tail(Complex jz, Complex s, double T) {
    const auto& table = detail::theta_over_j_table();
    Piece out;
    Complex jz_pow = 1.0;
    double last_mag = 0.0;
    int m = 1;
    for (; m <= detail::kQSeriesMaxPower; ++m) {
        jz_pow *= jz;
        Complex term = 0.0;
        const auto& coeffs = table[size_t(m)];
        for (int k = m; k < int(coeffs.size()); ++k) {
            const double c = coeffs[size_t(k)];
            if (c == 0.0) continue;
            const double pk = std::numbers::pi * double(k);
            const Complex piece =
                c * std::exp(-s * std::log(pk)) * upper_incomplete_gamma(s, pk * T);
            term += piece;
            if (std::abs(piece) < 1e-18 * std::abs(term) || pk * T > 745.0) break;
        }
        out.value += jz_pow * term;
        last_mag = std::abs(jz_pow * term);
        if (last_mag < 1e-18 * std::abs(out.value) && m >= 3) break;
    }
    // the m-ratio is at most 1/64 by the choice of T
    out.err = last_mag / 32.0;
    out.segments.push_back({T, kInfinity, out.value, out.err});
    return out;
}

Piece tail_from(Complex jz, Complex s, double T, const QuadratureConfig& cfg) {
    Piece out;
    const double t_geo = std::max(T, geometric_threshold(jz));
    if (cfg.tail_mode == TailMode::termwise_gamma) {
        if (t_geo > T) append(out, quad_finite(jz, s, T, t_geo, cfg));
        const Piece series = termwise_tail(jz, s, t_geo);
        out.value += series.value;
        out.err += series.err;
        out.segments.insert(out.segments.end(), series.segments.begin(), series.segments.end());
        return out;
    }
    // bound_truncation: push the cutoff until the analytic remainder bound
    // drops below the absolute tolerance
    double t_cut = t_geo;
    while (t_cut < 400.0 && tail_bound(jz, s.real(), t_cut) > 0.25 * cfg.abs_tol)
        t_cut += 1.0;
    const double bound = tail_bound(jz, s.real(), t_cut);
    append(out, quad_finite(jz, s, T, t_cut, cfg));
    out.err += bound;
    out.segments.push_back({t_cut, kInfinity, Complex(0.0), bound});
    return out;
}

// [t1, t2] with t1 < t2; sub-ranges below the inversion point are pulled back
// by t -> 1/t (weight s -> 1/2 - s), t2 = inf goes to the tail machinery
Piece assemble_segment(Complex jz, Complex s, double t1, double t2,
                       const QuadratureConfig& cfg) {
    Piece out;
    const Complex s_inv = 0.5 - s;
    if (t1 < kInversionPoint) {
        const double hi = std::min(t2, kInversionPoint);
        if (t1 == 0.0) {
            const Piece p = tail_from(jz, s_inv, 1.0 / hi, cfg);
            out.value += p.value;
            out.err += p.err;
            out.segments.insert(out.segments.end(), p.segments.begin(), p.segments.end());
        } else {
            append(out, quad_finite(jz, s_inv, 1.0 / hi, 1.0 / t1, cfg));
        }
    }
    if (t2 > kInversionPoint) {
        const double lo = std::max(t1, kInversionPoint);
        if (t2 == kInfinity) {
            const Piece p = tail_from(jz, s, lo, cfg);
            out.value += p.value;
            out.err += p.err;
            out.segments.insert(out.segments.end(), p.segments.begin(), p.segments.end());
        } else {
            append(out, quad_finite(jz, s, lo, t2, cfg));
        }
    }
    return out;
}

void require_off_axis(const PolePoint& z) {
    if (axis_margin(z) <= defaults::x_exclusion)
        throw DomainError("AxisPole",
                          "z is equivalent to the imaginary axis, where F_z is undefined");
}

}  // namespace

QuadratureResult f_z_segment(const PolePoint& z, SpectralParameter s,
                             double t1, double t2, const QuadratureConfig& cfg) {
    if (t1 == t2 && t1 >= 0.0) return {};  // empty interval
    if (!(t1 >= 0.0) || !(t2 > t1))
        throw DomainError("InvalidInterval", "need 0 <= t1 <= t2");
    require_off_axis(z);
    const Complex jz = j_theta(z.as_tau());
    Piece p = assemble_segment(jz, s.s, t1, t2, cfg);
    p.value = 0.0;  // re-sum so value == sum of segment contributions exactly
    for (const SegmentInfo& seg : p.segments) p.value += seg.contribution;
    return {p.value, p.err, p.segments};
}

QuadratureResult f_z(const PolePoint& z, SpectralParameter s,
                     const QuadratureConfig& cfg) {
    const Complex prefactor = s.s * (0.5 - s.s);
    if (prefactor == Complex(0.0)) return {};  // exact zero, no quadrature
    require_off_axis(z);

    const Complex jz = j_theta(z.as_tau());
    const double inv_y = 1.0 / z.y;
    Piece total;

    auto signed_segment = [&](double a, double b) {
        if (a == b) return;
        const double sign = a < b ? 1.0 : -1.0;
        const Piece p = assemble_segment(jz, s.s, std::min(a, b), std::max(a, b), cfg);
        total.value += sign * p.value;
        total.err += p.err;
        for (SegmentInfo seg : p.segments) {
            seg.contribution *= sign;
            total.segments.push_back(seg);
        }
    };

    signed_segment(0.0, inv_y);
    signed_segment(inv_y, cfg.t0);
    signed_segment(cfg.t0, z.y);
    {
        const Piece p = assemble_segment(jz, s.s, z.y, kInfinity, cfg);
        total.value += p.value;
        total.err += p.err;
        total.segments.insert(total.segments.end(), p.segments.begin(), p.segments.end());
    }

    QuadratureResult out;
    out.segments = std::move(total.segments);
    out.value = 0.0;
    out.err_estimate = 0.0;
    for (SegmentInfo& seg : out.segments) {
        seg.contribution *= prefactor;
        seg.err *= std::abs(prefactor);
        out.value += seg.contribution;
        out.err_estimate += seg.err;
    }
    return out;
}

double functional_equation_residual(const PolePoint& z, SpectralParameter s,
                                    const QuadratureConfig& cfg) {
    const Complex lhs = f_z(z, s, cfg).value;
    const Complex rhs = f_z(z, SpectralParameter(0.5 - s.s), cfg).value;
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

}  // namespace thetaxi
