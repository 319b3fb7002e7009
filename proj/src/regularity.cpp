#include "pzlab/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include <fftw3.h>

#include "pzlab/error.hpp"
#include "pzlab/resample.hpp"

namespace pzlab {

RegularityEstimate RegularityEstimate::from_H(double H, double H_lo, double H_hi,
                                              DimensionMethod method, LogLogFit fit) {
  RegularityEstimate est;
  est.H = H;
  est.zeta_R = 2.0 - H;
  est.ci_lo = std::min(2.0 - H_hi, est.zeta_R);
  est.ci_hi = std::max(2.0 - H_lo, est.zeta_R);
  est.method = method;
  est.accepted = fit.r_squared >= kAcceptR2;
  est.diagnostics = std::move(fit);
  return est;
}

std::size_t floor_pow2(std::size_t n) {
  if (n == 0) return 0;
  std::size_t p = 1;
  while (p <= n / 2) p *= 2;
  return p;
}

VariationProfile variation_profile(const SampledField& field, const VariationOptions& opts) {
  const std::size_t n = field.size();
  if (n < 16) fail(Errc::parameter, "variation profile needs at least 16 samples");
  if (!(opts.s_min_frac > 0.0 && opts.s_min_frac < opts.s_max_frac && opts.s_max_frac < 1.0))
    fail(Errc::parameter, "need 0 < s_min_frac < s_max_frac < 1");
  if (opts.n_s < 2) fail(Errc::parameter, "need at least 2 lags");

  const double extent = field.extent();
  const double step = field.step();
  const bool periodic = field.boundary() == Boundary::periodic;
  std::vector<std::size_t> ks;
  for (int i = 0; i < opts.n_s; ++i) {
    const double t = static_cast<double>(i) / (opts.n_s - 1);
    const double s = opts.s_min_frac * extent * std::pow(opts.s_max_frac / opts.s_min_frac, t);
    const auto k = static_cast<std::size_t>(std::floor(s / step + 1e-9));
    if (k < 1) fail(Errc::lag, "lag " + std::to_string(s) + " is below one grid step");
    if (k >= n) fail(Errc::lag, "lag exceeds the field length");
    if (ks.empty() || ks.back() != k) ks.push_back(k);
  }

  const auto v = field.values();
  VariationProfile prof;
  prof.lags.resize(ks.size());
  prof.f_values.resize(ks.size());
  parallel_for(ks.size(), [&](std::size_t j) {
    const std::size_t k = ks[j];
    double sum = 0.0;
    std::size_t terms = 0;
    if (periodic) {
      for (std::size_t i = 0; i < n; ++i) sum += std::abs(v[(i + k) % n] - v[i]);
      terms = n;
    } else {
      for (std::size_t i = 0; i + k < n; ++i) sum += std::abs(v[i + k] - v[i]);
      terms = n - k;
    }
    prof.lags[j] = static_cast<double>(k) * step;
    prof.f_values[j] = sum / static_cast<double>(terms);
  });
  return prof;
}

RegularityEstimate holder_estimate(const VariationProfile& profile) {
  if (profile.lags.size() != profile.f_values.size())
    fail(Errc::parameter, "profile lags and values differ in length");
  if (profile.lags.size() < 4) fail(Errc::window, "need at least 4 lags");
  for (double f : profile.f_values)
    if (!(f > 0.0)) fail(Errc::degenerate_profile, "F(s) = 0 inside the fitting window");
  LogLogFit fit = loglog_fit(profile.lags, profile.f_values);
  const auto [lo, hi] = slope_jackknife_ci(fit);
  return RegularityEstimate::from_H(fit.slope, lo, hi, DimensionMethod::variation, std::move(fit));
}

RegularityEstimate wavelet_holder(const SampledField& field, int n_scales) {
  const std::size_t n = field.size();
  if (n < 64) fail(Errc::parameter, "wavelet estimate needs at least 64 samples");
  const auto v = field.values();
  std::vector<double> scales, means;
  for (int j = 1; j <= n_scales; ++j) {
    const std::size_t stride = std::size_t{1} << (j - 1);
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; (2 * k + 1) * stride < n; ++k) {
      sum += std::abs(v[(2 * k + 1) * stride] - v[2 * k * stride]);
      ++count;
    }
    if (count < 4) continue;
    const double m = sum / static_cast<double>(count);
    if (!(m > 0.0)) fail(Errc::degenerate_profile, "zero detail energy at level " + std::to_string(j));
    scales.push_back(static_cast<double>(stride) * field.step());
    means.push_back(m);
  }
  if (scales.size() < 3) fail(Errc::scale, "fewer than 3 usable wavelet levels");
  LogLogFit fit = loglog_fit(scales, means);
  const auto [lo, hi] = slope_jackknife_ci(fit);
  return RegularityEstimate::from_H(fit.slope, lo, hi, DimensionMethod::wavelet, std::move(fit));
}

namespace {
std::mutex fftw_plan_mutex;
}

double spectral_entropy_psd(const SampledField& field) {
  const std::size_t n_in = field.size();
  if (n_in < 64) fail(Errc::parameter, "spectral entropy needs at least 64 samples");
  const std::size_t n = floor_pow2(n_in);
  const auto v = field.values();
  std::vector<double> x(n);
  if (n == n_in) {
    std::copy(v.begin(), v.end(), x.begin());
  } else {
    const double scale = static_cast<double>(n_in - 1) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      const double pos = static_cast<double>(i) * scale;
      const auto k = std::min(static_cast<std::size_t>(pos), n_in - 2);
      const double f = pos - static_cast<double>(k);
      x[i] = v[k] + f * (v[k + 1] - v[k]);
    }
  }
  double m = 0.0;
  for (double xi : x) m += xi;
  m /= static_cast<double>(n);
  for (double& xi : x) xi -= m;

  std::vector<fftw_complex> out(n / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_plan_mutex);
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), x.data(), out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(fftw_plan_mutex);
    fftw_destroy_plan(plan);
  }

  std::vector<double> power(n / 2);
  double total = 0.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    power[k - 1] = out[k][0] * out[k][0] + out[k][1] * out[k][1];
    total += power[k - 1];
  }
  if (!(total > 0.0)) fail(Errc::domain, "field has zero spectral energy");
  double h = 0.0;
  for (double p : power) {
    const double s = p / total;
    if (s > 0.0) h -= s * std::log(s);
  }
  return h;
}

}  // namespace pzlab
