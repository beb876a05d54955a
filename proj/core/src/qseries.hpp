#pragma once

#include <vector>

// Truncated power series in qt = e^{pi i tau} with real coefficients,
// internal to the termwise tail evaluation.

namespace thetaxi::detail {

using QSeries = std::vector<double>;  // index = power of qt

QSeries qs_mul(const QSeries& a, const QSeries& b, int order);

/// Coefficients of theta (index n^2 carries 2, constant 1).
QSeries theta_qseries(int order);

/// Coefficients of 1/j_theta = lambda (1 - lambda).
QSeries inv_j_qseries(int order);

/// Table [m] = coefficients of theta * (1/j_theta)^m, m = 1..max_power,
/// truncated at `order` powers of qt. Built once, immutable afterwards.
const std::vector<QSeries>& theta_over_j_table();

inline constexpr int kQSeriesOrder = 96;
inline constexpr int kQSeriesMaxPower = 48;

}  // namespace thetaxi::detail
