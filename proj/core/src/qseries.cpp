#include "qseries.hpp"

#include <cstddef>

namespace thetaxi::detail {

namespace {

QSeries qs_inverse(const QSeries& a, int order) {
    // reciprocal of a series with a[0] != 0
    QSeries inv(size_t(order), 0.0);
    inv[0] = 1.0 / a[0];
    for (int n = 1; n < order; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n && k < int(a.size()); ++k)
            acc += a[size_t(k)] * inv[size_t(n - k)];
        inv[size_t(n)] = -acc / a[0];
    }
    return inv;
}

QSeries qs_pow4(const QSeries& a, int order) {
    const QSeries sq = qs_mul(a, a, order);
    return qs_mul(sq, sq, order);
}

QSeries theta2_shifted_qseries(int order) {
    // theta_2 = 2 qt^{1/4} sum_{n>=0} qt^{n(n+1)}; the qt^{1/4} prefactor is
    // tracked separately: theta_2^4 = 16 qt * (this series)^4
    QSeries s(size_t(order), 0.0);
    for (int n = 0; n * (n + 1) < order; ++n) s[size_t(n * (n + 1))] += 1.0;
    return s;
}

}  // namespace

QSeries qs_mul(const QSeries& a, const QSeries& b, int order) {
    QSeries out(size_t(order), 0.0);
    for (int i = 0; i < int(a.size()) && i < order; ++i) {
        if (a[size_t(i)] == 0.0) continue;
        for (int j = 0; j < int(b.size()) && i + j < order; ++j)
            out[size_t(i + j)] += a[size_t(i)] * b[size_t(j)];
    }
    return out;
}

QSeries theta_qseries(int order) {
    QSeries s(size_t(order), 0.0);
    s[0] = 1.0;
    for (int n = 1; n * n < order; ++n) s[size_t(n * n)] += 2.0;
    return s;
}

QSeries inv_j_qseries(int order) {
    // lambda = theta_2^4 / theta^4 = 16 qt (sum qt^{n(n+1)})^4 / theta^4
    const QSeries th4 = qs_pow4(theta_qseries(order), order);
    const QSeries t2s4 = qs_pow4(theta2_shifted_qseries(order), order);
    QSeries lambda = qs_mul(t2s4, qs_inverse(th4, order), order);
    lambda.insert(lambda.begin(), 0.0);  // * qt
    lambda.resize(size_t(order));
    for (double& c : lambda) c *= 16.0;
    // 1/j = lambda (1 - lambda)
    QSeries one_minus(size_t(order), 0.0);
    one_minus[0] = 1.0;
    for (int k = 0; k < order; ++k) one_minus[size_t(k)] -= lambda[size_t(k)];
    return qs_mul(lambda, one_minus, order);
}

const std::vector<QSeries>& theta_over_j_table() {
    static const std::vector<QSeries> table = [] {
        const int order = kQSeriesOrder;
        const QSeries inv_j = inv_j_qseries(order);
        const QSeries th = theta_qseries(order);
        std::vector<QSeries> t;
        t.reserve(size_t(kQSeriesMaxPower) + 1);
        t.push_back(th);  // m = 0
        QSeries power = inv_j;
        for (int m = 1; m <= kQSeriesMaxPower; ++m) {
            t.push_back(qs_mul(th, power, order));
            power = qs_mul(power, inv_j, order);
        }
        return t;
    }();
    return table;
}

}  // namespace thetaxi::detail
