#include <cmath>

#include "thetaxi/modular_forms.hpp"

namespace thetaxi {

namespace {

constexpr double kTieTol = 1e-12;
constexpr int kMaxIterations = 10000;

const IntegerMatrix2x2 kS{0, -1, 1, 0};

IntegerMatrix2x2 t_shift(std::int64_t k) {  // T^{2k}
    return {1, 2 * k, 0, 1};
}

}  // namespace

bool in_theta_group(const IntegerMatrix2x2& m) {
    if (m.det() != 1)
        throw DomainError("NotUnimodular", "matrix must have determinant 1");
    return (m.a - m.d) % 2 == 0 && (m.b - m.c) % 2 == 0;
}

ReductionResult reduce_to_fundamental_domain(const PolePoint& z) {
    Complex w = z.z();
    IntegerMatrix2x2 gamma;  // identity
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        // shift Re(w) into (-1, 1] by powers of T^2; the tolerance makes the
        // tie at Re = -1 land on +1 and keeps Re = +1 fixed
        const auto k = std::int64_t(std::floor((w.real() + 1.0 - kTieTol) / 2.0));
        if (k != 0) {
            w -= 2.0 * double(k);
            gamma = t_shift(-k) * gamma;
        }
        const double norm2 = std::norm(w);
        if (norm2 < 1.0 - kTieTol) {
            w = -1.0 / w;  // Im strictly increases
            gamma = kS * gamma;
            continue;
        }
        if (norm2 <= 1.0 + kTieTol && w.real() < -kTieTol) {
            // tie on the unit circle resolves toward Re >= 0
            w = -1.0 / w;
            gamma = kS * gamma;
            continue;
        }
        return {UpperHalfPoint(w), gamma};
    }
    throw DomainError("ReductionStalled", "fundamental-domain reduction did not settle");
}

double axis_margin(const PolePoint& z) {
    return std::abs(reduce_to_fundamental_domain(z).point.u);
}

}  // namespace thetaxi
