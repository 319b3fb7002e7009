#include "pzlab/fractal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pzlab/error.hpp"
#include "pzlab/resample.hpp"

namespace pzlab {

std::string_view to_string(DimensionMethod m) noexcept {
  switch (m) {
    case DimensionMethod::box: return "box";
    case DimensionMethod::correlation: return "correlation";
    case DimensionMethod::variation: return "variation";
    case DimensionMethod::wavelet: return "wavelet";
  }
  return "unknown";
}

namespace {

struct Ols {
  double slope;
  double intercept;
  double rss;
  double syy;
  double sxx;
};

// Centred least squares of v on u.
Ols ols(std::span<const double> u, std::span<const double> v) {
  const auto n = static_cast<double>(u.size());
  double mu = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= n;
  mv /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double du = u[i] - mu, dv = v[i] - mv;
    sxx += du * du;
    sxy += du * dv;
    syy += dv * dv;
  }
  if (!(sxx > 0.0)) fail(Errc::fit, "zero variance in log x");
  const double slope = sxy / sxx;
  const double intercept = mv - slope * mu;
  double rss = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = v[i] - (intercept + slope * u[i]);
    rss += r * r;
  }
  return {slope, intercept, rss, syy, sxx};
}

double log_checked(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) fail(Errc::domain, "log-log fit needs positive values");
  return std::log(x);
}

}  // namespace

LogLogFit loglog_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) fail(Errc::parameter, "log-log fit needs equal lengths");
  if (xs.size() < 2) fail(Errc::parameter, "log-log fit needs at least 2 points");
  std::vector<double> u(xs.size()), v(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    u[i] = log_checked(xs[i]);
    v[i] = log_checked(ys[i]);
  }
  const Ols o = ols(u, v);
  LogLogFit fit;
  fit.slope = o.slope;
  fit.intercept = o.intercept;
  fit.r_squared = o.syy > 0.0 ? std::clamp(1.0 - o.rss / o.syy, 0.0, 1.0) : 1.0;
  fit.slope_stderr =
      xs.size() > 2 ? std::sqrt(o.rss / (static_cast<double>(xs.size()) - 2.0) / o.sxx) : 0.0;
  fit.window.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fit.window.emplace_back(xs[i], ys[i]);
  return fit;
}

LogLogFit best_window_fit(std::span<const double> xs, std::span<const double> ys,
                          std::size_t width) {
  if (xs.size() != ys.size()) fail(Errc::parameter, "window fit needs equal lengths");
  if (width < 2 || xs.size() < width) fail(Errc::window, "not enough points for the window");
  LogLogFit best;
  bool have = false;
  for (std::size_t s = 0; s + width <= xs.size(); ++s) {
    LogLogFit f = loglog_fit(xs.subspan(s, width), ys.subspan(s, width));
    if (!have || f.r_squared > best.r_squared) {
      best = std::move(f);
      have = true;
    }
  }
  return best;
}

std::pair<double, double> slope_jackknife_ci(const LogLogFit& fit) {
  const std::size_t n = fit.window.size();
  if (n < 3) return {fit.slope, fit.slope};
  std::vector<double> u(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = std::log(fit.window[i].first);
    v[i] = std::log(fit.window[i].second);
  }
  std::vector<double> slopes(n);
  std::vector<double> uu(n - 1), vv(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      uu[k] = u[j];
      vv[k] = v[j];
      ++k;
    }
    slopes[i] = ols(uu, vv).slope;
  }
  double bar = 0.0;
  for (double s : slopes) bar += s;
  bar /= static_cast<double>(n);
  double ss = 0.0;
  for (double s : slopes) ss += (s - bar) * (s - bar);
  const double se = std::sqrt((static_cast<double>(n) - 1.0) / static_cast<double>(n) * ss);
  return {fit.slope - 1.96 * se, fit.slope + 1.96 * se};
}

std::vector<double> bootstrap_slopes(const LogLogFit& fit, std::size_t n, std::uint64_t seed,
                                     std::uint64_t trial) {
  const std::size_t m = fit.window.size();
  if (m < 3) fail(Errc::resample, "residual bootstrap needs at least 3 fit points");
  std::vector<double> u(m), fitted(m), resid(m);
  for (std::size_t i = 0; i < m; ++i) {
    u[i] = std::log(fit.window[i].first);
    fitted[i] = fit.intercept + fit.slope * u[i];
    resid[i] = std::log(fit.window[i].second) - fitted[i];
  }
  std::vector<double> slopes(n);
  parallel_for(n, [&](std::size_t j) {
    StreamRng rng(seed, trial, j);
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = fitted[i] + resid[rng.below(m)];
    slopes[j] = ols(u, v).slope;
  });
  return slopes;
}

std::size_t box_count(const PointSet& points, double epsilon) {
  if (!(epsilon > 0.0)) fail(Errc::parameter, "epsilon must be positive");
  if (points.empty()) fail(Errc::empty_input, "box counting needs points");
  const double width = points.width();
  if (epsilon >= width) return 1;
  const auto last_box = static_cast<std::int64_t>(std::ceil(width / epsilon)) - 1;
  std::size_t count = 0;
  std::int64_t prev = -1;
  for (double x : points.positions()) {
    auto k = static_cast<std::int64_t>(std::floor((x - points.ambient_lo()) / epsilon));
    k = std::min(k, last_box);
    if (k != prev) {
      ++count;
      prev = k;
    }
  }
  return count;
}

std::vector<double> epsilon_grid(double width, const BoxDimensionOptions& opts) {
  if (!(opts.eps_min_frac > 0.0 && opts.eps_min_frac < opts.eps_max_frac &&
        opts.eps_max_frac < 1.0))
    fail(Errc::parameter, "need 0 < eps_min_frac < eps_max_frac < 1");
  if (opts.n_eps < 4) fail(Errc::window, "need at least 4 box sizes");
  const auto n = static_cast<std::size_t>(opts.n_eps);
  std::vector<double> eps(n);
  const double lo = opts.eps_min_frac * width, hi = opts.eps_max_frac * width;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    eps[i] = opts.grid == EpsGrid::geometric ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
  }
  return eps;
}

namespace {

void finish_dimension(DimensionEstimate& est, double raw) {
  est.raw_value = raw;
  est.value = std::clamp(raw, 0.0, 2.0);
  est.clamped = est.value != raw;
  est.ci_lo = std::min(est.ci_lo, est.value);
  est.ci_hi = std::max(est.ci_hi, est.value);
  est.accepted = est.diagnostics.r_squared >= kAcceptR2;
}

}  // namespace

DimensionEstimate box_dimension(const PointSet& points, const BoxDimensionOptions& opts) {
  if (points.empty()) fail(Errc::empty_input, "box dimension needs points");
  if (!(points.width() > 0.0)) fail(Errc::domain, "ambient interval has zero width");
  if (opts.dynamic_window && opts.n_eps < 6)
    fail(Errc::window, "dynamic window needs at least 6 box sizes");
  const auto eps = epsilon_grid(points.width(), opts);
  std::vector<double> counts(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i)
    counts[i] = static_cast<double>(box_count(points, eps[i]));

  DimensionEstimate est;
  est.method = DimensionMethod::box;
  if (std::all_of(counts.begin(), counts.end(), [&](double c) { return c == counts.front(); })) {
    est.diagnostics = loglog_fit(eps, counts);
    est.flat = true;
    est.ci_lo = est.ci_hi = 0.0;
    finish_dimension(est, 0.0);
    return est;
  }
  est.diagnostics = opts.dynamic_window ? best_window_fit(eps, counts) : loglog_fit(eps, counts);
  const auto [lo, hi] = slope_jackknife_ci(est.diagnostics);
  est.ci_lo = -hi;
  est.ci_hi = -lo;
  finish_dimension(est, -est.diagnostics.slope);
  return est;
}

DimensionEstimate correlation_dimension(const PointSet& points, double r_min, double r_max,
                                        int n_r) {
  if (points.size() < 50) fail(Errc::sample, "correlation dimension needs at least 50 points");
  if (!(r_min > 0.0 && r_min < r_max)) fail(Errc::parameter, "need 0 < r_min < r_max");
  if (n_r < 4) fail(Errc::window, "need at least 4 radii");
  const auto xs = points.positions();
  if (xs.front() == xs.back()) fail(Errc::domain, "all points identical");
  const auto n = xs.size();
  const double norm = 2.0 / (static_cast<double>(n) * static_cast<double>(n - 1));

  std::vector<double> rs, cs;
  for (int k = 0; k < n_r; ++k) {
    const double r = r_min * std::pow(r_max / r_min, static_cast<double>(k) / (n_r - 1));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto end = std::lower_bound(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1, xs.end(),
                                        xs[i] + r);
      pairs += static_cast<std::size_t>(end - xs.begin()) - i - 1;
    }
    if (pairs == 0) continue;
    rs.push_back(r);
    cs.push_back(norm * static_cast<double>(pairs));
  }
  if (rs.size() < 4) fail(Errc::window, "fewer than 4 radii with pairs");
  DimensionEstimate est;
  est.method = DimensionMethod::correlation;
  est.diagnostics = loglog_fit(rs, cs);
  const auto [lo, hi] = slope_jackknife_ci(est.diagnostics);
  est.ci_lo = lo;
  est.ci_hi = hi;
  finish_dimension(est, est.diagnostics.slope);
  return est;
}

}  // namespace pzlab
