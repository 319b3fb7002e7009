#include "pzlab/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pzlab/error.hpp"

namespace pzlab {

std::string_view to_string(ScalingModel m) noexcept {
  switch (m) {
    case ScalingModel::power: return "power";
    case ScalingModel::linear_inv: return "linear_inv";
    case ScalingModel::log_inv: return "log_inv";
  }
  return "unknown";
}

ScalingModel scaling_model_from_string(std::string_view name) {
  if (name == "power") return ScalingModel::power;
  if (name == "linear_inv" || name == "linear") return ScalingModel::linear_inv;
  if (name == "log_inv" || name == "log") return ScalingModel::log_inv;
  fail(Errc::parameter, "unknown scaling model '" + std::string(name) + "'");
}

int parameter_count(ScalingModel m) noexcept { return m == ScalingModel::power ? 3 : 2; }

double ScalingFit::predict(double L) const {
  switch (model) {
    case ScalingModel::power: return c_inf + a * std::pow(L, -b);
    case ScalingModel::linear_inv: return c_inf + a / L;
    case ScalingModel::log_inv: return c_inf + a / std::log(L);
  }
  return c_inf;
}

double aic_value(double rss, int n, int k, double data_scale) {
  const double eps = 1e-12 * std::max(data_scale, std::numeric_limits<double>::min());
  const double floor = static_cast<double>(n) * eps * eps;
  return n * std::log(std::max(rss, floor) / n) + 2.0 * k;
}

namespace {

struct LinearSolution {
  double c;
  double a;
  double rss;
  double g_range;
};

// Least squares of C on (1, g), centred for conditioning.
LinearSolution solve_linear(std::span<const double> g, std::span<const double> C) {
  const auto n = static_cast<double>(g.size());
  double mg = 0.0, mc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    mg += g[i];
    mc += C[i];
  }
  mg /= n;
  mc /= n;
  double sgg = 0.0, sgc = 0.0;
  double gmin = g[0], gmax = g[0];
  for (std::size_t i = 0; i < g.size(); ++i) {
    sgg += (g[i] - mg) * (g[i] - mg);
    sgc += (g[i] - mg) * (C[i] - mc);
    gmin = std::min(gmin, g[i]);
    gmax = std::max(gmax, g[i]);
  }
  const double a = sgg > 0.0 ? sgc / sgg : 0.0;
  const double c = mc - a * mg;
  double rss = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double r = C[i] - (c + a * g[i]);
    rss += r * r;
  }
  return {c, a, rss, gmax - gmin};
}

LinearSolution solve_power(std::span<const double> Ls, std::span<const double> Cs, double b,
                           std::vector<double>& g) {
  for (std::size_t i = 0; i < Ls.size(); ++i) g[i] = std::pow(Ls[i], -b);
  return solve_linear(g, Cs);
}

void validate_data(std::span<const double> Ls, std::span<const double> Cs, std::size_t min_n) {
  if (Ls.size() != Cs.size()) fail(Errc::parameter, "L and C lengths differ");
  if (Ls.size() < min_n)
    fail(Errc::parameter, "need at least " + std::to_string(min_n) + " points");
  for (std::size_t i = 0; i < Ls.size(); ++i) {
    if (!(Ls[i] > 0.0) || !std::isfinite(Cs[i])) fail(Errc::parameter, "invalid (L, C) point");
    if (i > 0 && !(Ls[i - 1] < Ls[i])) fail(Errc::parameter, "L values must be ascending");
  }
}

constexpr int kGridPoints = 296;
constexpr double kGolden = 0.6180339887498949;

}  // namespace

ScalingFit fit_model(ScalingModel model, std::span<const double> Ls, std::span<const double> Cs) {
  validate_data(Ls, Cs, 5);
  if (model == ScalingModel::log_inv && Ls.front() <= 1.0)
    fail(Errc::parameter, "log_inv model needs L > 1");
  const std::size_t n = Ls.size();
  double scale = 0.0;
  for (double c : Cs) scale = std::max(scale, std::abs(c));

  ScalingFit fit;
  fit.model = model;
  fit.n = static_cast<int>(n);
  std::vector<double> g(n);
  LinearSolution sol{};
  if (model == ScalingModel::power) {
    const double step = (kPowerBMax - kPowerBMin) / (kGridPoints - 1);
    auto rss_at = [&](double b) { return solve_power(Ls, Cs, b, g).rss; };
    int best_i = 0;
    double best_rss = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGridPoints; ++i) {
      const double r = rss_at(kPowerBMin + i * step);
      if (r < best_rss) {
        best_rss = r;
        best_i = i;
      }
    }
    double lo = kPowerBMin + std::max(0, best_i - 1) * step;
    double hi = kPowerBMin + std::min(kGridPoints - 1, best_i + 1) * step;
    double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
    double f1 = rss_at(x1), f2 = rss_at(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - kGolden * (hi - lo);
        f1 = rss_at(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + kGolden * (hi - lo);
        f2 = rss_at(x2);
      }
    }
    double b = 0.5 * (lo + hi);
    // The bracket ends are candidates too, so a bound optimum is reported exactly.
    for (double cand : {kPowerBMin + std::max(0, best_i - 1) * step,
                        kPowerBMin + std::min(kGridPoints - 1, best_i + 1) * step}) {
      if (rss_at(cand) < rss_at(b)) b = cand;
    }
    if (!std::isfinite(b)) fail(Errc::fit, "power fit did not converge");
    sol = solve_power(Ls, Cs, b, g);
    fit.b = b;
    fit.b_at_bound = b <= kPowerBMin + 1e-9 || b >= kPowerBMax - 1e-9;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      g[i] = model == ScalingModel::linear_inv ? 1.0 / Ls[i] : 1.0 / std::log(Ls[i]);
    sol = solve_linear(g, Cs);
    fit.b = model == ScalingModel::linear_inv ? 1.0 : 0.0;
  }
  fit.c_inf = sol.c;
  fit.a = sol.a;
  fit.rss = sol.rss;
  fit.aic = aic_value(sol.rss, fit.n, parameter_count(model), scale);
  fit.degenerate = std::abs(sol.a) * sol.g_range <= 1e-9 * (1.0 + scale);
  return fit;
}

AicSelection aic_select(std::span<const ScalingFit> fits) {
  if (fits.empty()) fail(Errc::parameter, "no fits to compare");
  for (const auto& f : fits)
    if (f.n != fits.front().n) fail(Errc::comparison, "fits use different sample sizes");
  AicSelection out;
  if (fits.size() == 1) {
    out.best = fits.front();
    return out;
  }
  double min_aic = fits.front().aic;
  for (const auto& f : fits) min_aic = std::min(min_aic, f.aic);
  std::size_t best = fits.size();
  for (std::size_t i = 0; i < fits.size(); ++i) {
    if (fits[i].aic - min_aic >= 0.01) continue;
    if (best == fits.size() || parameter_count(fits[i].model) < parameter_count(fits[best].model) ||
        (parameter_count(fits[i].model) == parameter_count(fits[best].model) &&
         fits[i].aic < fits[best].aic))
      best = i;
  }
  out.best = fits[best];
  for (const auto& f : fits) out.deltas.push_back(f.aic - out.best.aic);
  return out;
}

CvResult loo_cv(ScalingModel model, std::span<const double> Ls, std::span<const double> Cs) {
  validate_data(Ls, Cs, 6);
  const std::size_t n = Ls.size();
  CvResult out;
  double sse = 0.0;
  std::size_t ok = 0;
  std::vector<double> l(n - 1), c(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      l[k] = Ls[j];
      c[k] = Cs[j];
      ++k;
    }
    try {
      const ScalingFit f = fit_model(model, l, c);
      const double r = Cs[i] - f.predict(Ls[i]);
      sse += r * r;
      ++ok;
    } catch (const Error&) {
      out.failed_folds.push_back(i);
    }
  }
  if (static_cast<double>(out.failed_folds.size()) > 0.2 * static_cast<double>(n))
    fail(Errc::cross_validation,
         std::to_string(out.failed_folds.size()) + " of " + std::to_string(n) + " folds failed");
  out.mse = sse / static_cast<double>(ok);
  return out;
}

}  // namespace pzlab
