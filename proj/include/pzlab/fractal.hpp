#pragma once

// Box-counting and correlation dimensions with log-log fitting.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pzlab/arith.hpp"

namespace pzlab {

/// Ordinary least squares of ln y on ln x.
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double slope_stderr = 0.0;
  std::vector<std::pair<double, double>> window;  // (x, y) pairs used
};

LogLogFit loglog_fit(std::span<const double> xs, std::span<const double> ys);

enum class DimensionMethod { box, correlation, variation, wavelet };
std::string_view to_string(DimensionMethod m) noexcept;

enum class EpsGrid { geometric, arithmetic };

struct DimensionEstimate {
  double value = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  DimensionMethod method = DimensionMethod::box;
  LogLogFit diagnostics;
  bool accepted = false;  // window R^2 >= 0.99
  bool flat = false;      // every count equal, slope forced to 0
  bool clamped = false;   // raw value fell outside [0, 2]
  double raw_value = 0.0;
};

inline constexpr double kAcceptR2 = 0.99;

struct BoxDimensionOptions {
  double eps_min_frac = 0.01;
  double eps_max_frac = 0.1;
  EpsGrid grid = EpsGrid::geometric;
  int n_eps = 12;
  bool dynamic_window = false;
};

/// Number of boxes [lo + k eps, lo + (k+1) eps) covering the ambient
/// interval that contain at least one point.
std::size_t box_count(const PointSet& points, double epsilon);

/// Box sizes used by box_dimension (absolute units).
std::vector<double> epsilon_grid(double width, const BoxDimensionOptions& opts);

DimensionEstimate box_dimension(const PointSet& points, const BoxDimensionOptions& opts = {});

/// Slope of ln C(r) vs ln r with the pair correlation sum
/// C(r) = 2/(n(n-1)) #{i<j : |x_i - x_j| < r} on a geometric r grid.
DimensionEstimate correlation_dimension(const PointSet& points, double r_min, double r_max,
                                        int n_r = 12);

/// Four consecutive points with the highest R^2 (first wins on ties).
LogLogFit best_window_fit(std::span<const double> xs, std::span<const double> ys,
                          std::size_t width = 4);

/// Jackknife 95% interval for the slope of a fit (leave one window point out).
std::pair<double, double> slope_jackknife_ci(const LogLogFit& fit);

/// Residual bootstrap of a log-log slope: the fitted line plus resampled
/// residuals is refitted n times. Returns the resampled slopes.
std::vector<double> bootstrap_slopes(const LogLogFit& fit, std::size_t n, std::uint64_t seed,
                                     std::uint64_t trial);

}  // namespace pzlab
