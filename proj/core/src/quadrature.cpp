#include <algorithm>
#include <array>
#include <cmath>

#include "thetaxi/errors.hpp"
#include "thetaxi/quadrature.hpp"

namespace thetaxi {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (nodes by |x|, the even
// indices are the embedded Gauss points).
constexpr std::array<double, 8> kNodes = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01,
};
constexpr std::array<double, 8> kWeightsKronrod = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02,
};
constexpr std::array<double, 4> kWeightsGauss = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01,
};

struct Leaf {
    double a, b;
    Complex value;
    double err;
};

Leaf gk15(const std::function<Complex(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    const Complex f0 = f(mid);
    Complex kronrod = kWeightsKronrod[0] * f0;
    Complex gauss = kWeightsGauss[0] * f0;
    double resabs = kWeightsKronrod[0] * std::abs(f0);
    std::array<Complex, 15> samples;
    samples[0] = f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[size_t(i)];
        const Complex lo = f(mid - dx);
        const Complex hi = f(mid + dx);
        samples[size_t(2 * i - 1)] = lo;
        samples[size_t(2 * i)] = hi;
        kronrod += kWeightsKronrod[size_t(i)] * (lo + hi);
        resabs += kWeightsKronrod[size_t(i)] * (std::abs(lo) + std::abs(hi));
        if (i % 2 == 0) gauss += kWeightsGauss[size_t(i / 2)] * (lo + hi);
    }

    const Complex mean = kronrod * 0.5;
    double resasc = kWeightsKronrod[0] * std::abs(f0 - mean);
    for (int i = 1; i < 8; ++i)
        resasc += kWeightsKronrod[size_t(i)] * (std::abs(samples[size_t(2 * i - 1)] - mean) +
                                                std::abs(samples[size_t(2 * i)] - mean));
    resasc *= std::abs(half);
    resabs *= std::abs(half);

    const Complex value = kronrod * half;
    double err = std::abs(kronrod - gauss) * std::abs(half);
    // quadpack-style scaled estimate
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * 1e-16 * resabs;
    err = std::max(err, round_floor);
    return {a, b, value, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f,
                                    double a, double b,
                                    double abs_tol, double rel_tol,
                                    int max_subdivisions) {
    QuadratureResult out;
    if (a == b) return out;

    std::vector<Leaf> leaves;
    leaves.push_back(gk15(f, a, b));
    Complex total = leaves[0].value;
    double total_err = leaves[0].err;

    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (int(leaves.size()) >= max_subdivisions)
            throw ToleranceError("ToleranceNotMet",
                                 "adaptive quadrature ran out of subdivisions");
        auto worst = std::max_element(leaves.begin(), leaves.end(),
                                      [](const Leaf& p, const Leaf& q) { return p.err < q.err; });
        const Leaf split = *worst;
        const double mid = 0.5 * (split.a + split.b);
        if (mid <= split.a || mid >= split.b)
            throw ToleranceError("ToleranceNotMet",
                                 "interval no longer splittable in double precision");
        *worst = gk15(f, split.a, mid);
        leaves.push_back(gk15(f, mid, split.b));

        total = 0.0;
        total_err = 0.0;
        for (const Leaf& leaf : leaves) {
            total += leaf.value;
            total_err += leaf.err;
        }
    }

    std::sort(leaves.begin(), leaves.end(),
              [](const Leaf& p, const Leaf& q) { return p.a < q.a; });
    out.segments.reserve(leaves.size());
    // the reported value is the plain left-to-right sum of the segment
    // contributions, so the two stay bit-identical
    out.value = 0.0;
    out.err_estimate = 0.0;
    for (const Leaf& leaf : leaves) {
        out.segments.push_back({leaf.a, leaf.b, leaf.value, leaf.err});
        out.value += leaf.value;
        out.err_estimate += leaf.err;
    }
    return out;
}

}  // namespace thetaxi
