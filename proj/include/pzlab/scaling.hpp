#pragma once

// Finite-size scaling fits C(L) = c_inf + a * g(L) with g one of
// L^-b (power), 1/L (linear in 1/L) or 1/ln L, AIC selection and
// leave-one-out cross-validation.

#include <span>
#include <string_view>
#include <vector>

namespace pzlab {

enum class ScalingModel { power, linear_inv, log_inv };

std::string_view to_string(ScalingModel m) noexcept;
ScalingModel scaling_model_from_string(std::string_view name);
int parameter_count(ScalingModel m) noexcept;

struct ScalingFit {
  ScalingModel model = ScalingModel::power;
  double c_inf = 0.0;
  double a = 0.0;
  double b = 0.0;  // power model only; 1 for linear_inv, 0 otherwise
  double rss = 0.0;
  double aic = 0.0;
  int n = 0;
  bool degenerate = false;  // |a| negligible against the data scale
  bool b_at_bound = false;  // power optimum pinned to the search bound

  double predict(double L) const;
};

inline constexpr double kPowerBMin = 0.05;
inline constexpr double kPowerBMax = 3.0;

ScalingFit fit_model(ScalingModel model, std::span<const double> Ls, std::span<const double> Cs);

struct AicSelection {
  ScalingFit best;
  std::vector<double> deltas;  // aic_i - aic_best, in input order; empty for one fit
};

/// Minimum AIC; differences under 0.01 go to the model with fewer parameters.
AicSelection aic_select(std::span<const ScalingFit> fits);

struct CvResult {
  double mse = 0.0;
  std::vector<std::size_t> failed_folds;
};

CvResult loo_cv(ScalingModel model, std::span<const double> Ls, std::span<const double> Cs);

/// AIC = n ln(RSS/n) + 2k with RSS floored at the rounding level of the data.
double aic_value(double rss, int n, int k, double data_scale);

}  // namespace pzlab
