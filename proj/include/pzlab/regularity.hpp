#pragma once

// Holder exponent H and the regularity index zeta_R = 2 - H of sampled
// fields, plus the PSD spectral entropy.

#include <vector>

#include "pzlab/field.hpp"
#include "pzlab/fractal.hpp"

namespace pzlab {

/// Mean absolute increments F(s) at lags s (whole grid steps).
struct VariationProfile {
  std::vector<double> lags;
  std::vector<double> f_values;
};

struct RegularityEstimate {
  double H = 0.0;
  double zeta_R = 2.0;  // always exactly 2 - H
  double ci_lo = 0.0;   // on zeta_R
  double ci_hi = 0.0;
  DimensionMethod method = DimensionMethod::variation;
  LogLogFit diagnostics;
  bool accepted = false;

  static RegularityEstimate from_H(double H, double H_lo, double H_hi, DimensionMethod method,
                                   LogLogFit fit);
};

struct VariationOptions {
  double s_min_frac = 0.01;
  double s_max_frac = 0.1;
  int n_s = 12;
};

/// F(s) = mean |V(x+s) - V(x)| over the domain; periodic fields wrap,
/// clamped fields average over the n - k available pairs.
/// Requested lags snap down to whole grid steps; duplicates collapse.
VariationProfile variation_profile(const SampledField& field, const VariationOptions& opts = {});

/// H is the slope of ln F against ln s; the interval is a leave-one-lag-out
/// jackknife (1.96 standard errors).
RegularityEstimate holder_estimate(const VariationProfile& profile);

/// Haar-type cross-check. The field is decimated dyadically (sample pyramid
/// a_j[k] = V[k 2^j]); the level-j detail is the difference of neighbouring
/// level-(j-1) samples, and H is the slope of log2 mean|detail| over levels
/// 1..n_scales. Levels with fewer than 4 details are dropped.
RegularityEstimate wavelet_holder(const SampledField& field, int n_scales = 8);

/// -sum S ln S over the normalised one-sided periodogram (nats). Fields whose
/// length is not a power of two are linearly resampled down to one.
double spectral_entropy_psd(const SampledField& field);

/// Largest power of two <= n.
std::size_t floor_pow2(std::size_t n);

}  // namespace pzlab
