#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <thetaxi/io.hpp>
#include <thetaxi/quadrature.hpp>
#include <thetaxi/types.hpp>

namespace thetaxi::cli {

/// Rectangle of spectral parameters with step sizes, "re0:re1:step,im0:im1:step".
struct SGrid {
    double re0 = 0.0, re1 = 0.0, re_step = 1.0;
    double im0 = 0.0, im1 = 0.0, im_step = 1.0;

    std::vector<Complex> enumerate() const;
};

struct SweepSpec {
    std::vector<PolePoint> z_list;
    std::vector<Complex> s_list;  // enumerated grid or explicit points
    std::vector<double> y_list;
    std::vector<double> x_list;
    QuadratureConfig cfg;
};

SGrid parse_s_grid(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);
std::vector<Complex> parse_complex_list(const std::string& text);

/// key=value file, '#' comments; missing file is an error.
std::unordered_map<std::string, std::string> read_config_file(const std::string& path);

/// Deterministic parallel map: results land in input order however the
/// workers are scheduled.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

struct SelfTestResult {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Reduced-size versions of the library's invariant suites; deterministic for
/// a fixed seed. tolerance_scale multiplies every threshold.
std::vector<SelfTestResult> run_selftest(std::uint64_t seed, double tolerance_scale);

}  // namespace thetaxi::cli
