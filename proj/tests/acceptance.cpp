// Acceptance checks: one PASS/FAIL line per criterion.
// Usage: acceptance [N]   runs criterion N only, or all twelve.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "cli_runner.hpp"
#include "pzlab/duality.hpp"
#include "pzlab/fractal.hpp"
#include "pzlab/modular.hpp"
#include "pzlab/regularity.hpp"
#include "pzlab/resample.hpp"
#include "pzlab/rgflow.hpp"
#include "pzlab/scaling.hpp"
#include "pzlab/synthetic.hpp"
#include "pzlab/zeros.hpp"
#include "reference_data.hpp"

using namespace pzlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const ZeroTable& zeros_fixture() {
  static const ZeroTable t = parse_zero_file(fs::path(PZLAB_DATA_DIR) / "zeros_first.txt");
  return t;
}

const SweepRecord* record_at(const SweepResult& res, double L) {
  for (const auto& r : res.records)
    if (r.L == L) return &r;
  return nullptr;
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = 0.5 * static_cast<double>(i + j) + 1.0;
    i = j + 1;
  }
  return r;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const auto rx = ranks(x), ry = ranks(y);
  const double mx = mean(rx), my = mean(ry);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::int64_t brute_force_trace(std::int64_t N, std::int64_t bound) {
  std::int64_t best = 0;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t d = -bound; d <= bound; ++d) {
      const std::int64_t t = std::llabs(a + d);
      if (t <= 2 || (best != 0 && t >= best)) continue;
      for (std::int64_t c = N; c <= bound; c += N) {
        const std::int64_t num = a * d - 1;
        if (num % c == 0 && std::llabs(num / c) <= bound) {
          best = t;
          break;
        }
      }
    }
  return best;
}

Outcome cantor() {
  const auto t0 = Clock::now();
  const double d = box_dimension(cantor_points(8)).value;
  const double secs = seconds_since(t0);
  const bool pass = d >= 0.61 && d <= 0.65 && secs < 1.0;
  return {pass, fmt::format("box dimension {:.4f} in [0.61, 0.65], {:.3f} s < 1 s", d, secs)};
}

Outcome weierstrass() {
  const auto t0 = Clock::now();
  const double z = holder_estimate(variation_profile(weierstrass_field(0.5, 40, 4097))).zeta_R;
  const double secs = seconds_since(t0);
  const bool pass = z >= 1.43 && z <= 1.55 && secs < 5.0;
  return {pass, fmt::format("zeta_R(H=0.5) {:.4f} in [1.43, 1.55], {:.3f} s < 5 s", z, secs)};
}

Outcome dimension_band() {
  SweepConfig cfg;
  cfg.scales = reference_scales();
  cfg.bootstrap_n = 200;
  const auto t0 = Clock::now();
  const SweepResult res = scale_sweep(cfg, zeros_fixture());
  const double secs = seconds_since(t0);
  const SweepRecord* r = record_at(res, 1000);
  if (!r) return {false, "no record at L = 1000"};
  const double d = r->d_P.value, z = r->zeta_R.zeta_R;
  const bool pass = d >= 0.35 && d <= 0.51 && z >= 0.58 && z <= 0.68 && secs < 60.0;
  return {pass, fmt::format("L=1000: d_P {:.4f} in [0.35, 0.51], zeta_R {:.4f} in [0.58, 0.68], {:.2f} s < 60 s",
                            d, z, secs)};
}

Outcome duality_band() {
  SweepConfig cfg;
  cfg.scales = reference_scales();
  const SweepResult res = scale_sweep(cfg, zeros_fixture());
  bool exact = !res.records.empty();
  for (const auto& r : res.records) exact = exact && r.C_beta4 == 2.0 * r.C_beta2;
  const SweepRecord* r = record_at(res, 2000);
  if (!r) return {false, "no record at L = 2000"};
  const bool in_band = r->K >= 3.55 && r->K <= 4.05;
  return {in_band && exact,
          fmt::format("K(2000) {:.4f} in [3.55, 4.05]; C(4) = 2 C(2) exactly on {} of {} records", r->K,
                      exact ? res.records.size() : 0, res.records.size())};
}

Outcome scaling_self_inverse() {
  const auto Ls = reference_scales();
  const auto exact = power_sweep(7.154, 20.0, 0.51, Ls, 0.0, 1);
  const auto f = fit_model(ScalingModel::power, exact.Ls, exact.Cs);
  const double rel = std::max({std::abs(f.c_inf / 7.154 - 1), std::abs(f.a / 20.0 - 1), std::abs(f.b / 0.51 - 1)});
  const auto noisy = power_sweep(7.154, 20.0, 0.51, Ls, 0.02, SweepConfig{}.seed);
  const double b_noisy = fit_model(ScalingModel::power, noisy.Ls, noisy.Cs).b;
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = power_sweep(7.154, 20.0, 0.51, Ls, 0.02, seed);
    const std::vector<ScalingFit> fits{fit_model(ScalingModel::power, s.Ls, s.Cs),
                                       fit_model(ScalingModel::linear_inv, s.Ls, s.Cs),
                                       fit_model(ScalingModel::log_inv, s.Ls, s.Cs)};
    wins += aic_select(fits).best.model == ScalingModel::power;
  }
  const bool pass = rel <= 1e-3 && std::abs(b_noisy - 0.51) <= 0.02 && wins >= 95;
  return {pass, fmt::format("noiseless max rel error {:.2e} <= 1e-3; noisy b {:.4f} within 0.51 +/- 0.02; "
                            "AIC picks power in {}/100 >= 95",
                            rel, b_noisy, wins)};
}

Outcome trend() {
  SweepConfig cfg;
  cfg.scales = reference_scales();
  const SweepResult res = scale_sweep(cfg, zeros_fixture());
  std::vector<double> Ls, Ks;
  for (const auto& r : res.records) {
    Ls.push_back(r.L);
    Ks.push_back(r.K);
  }
  if (Ls.size() < 6) return {false, fmt::format("{} records, need at least 6", Ls.size())};
  const double rho = spearman(Ls, Ks);
  const ScalingFit fit = fit_model(ScalingModel::power, Ls, Ks);
  std::vector<double> xs, gaps;
  for (std::size_t i = 0; i < Ls.size(); ++i) {
    const double g = std::abs(Ks[i] - fit.c_inf);
    if (g > 0) {
      xs.push_back(Ls[i]);
      gaps.push_back(g);
    }
  }
  const double slope = loglog_fit(xs, gaps).slope;
  const bool pass = rho < 0 && slope >= -0.9 && slope <= -0.2;
  return {pass, fmt::format("Spearman(L, K) {:.4f} < 0 over {} records; tail slope of K - K_inf ({:.4f}) is "
                            "{:.4f} in [-0.9, -0.2]",
                            rho, Ls.size(), fit.c_inf, slope)};
}

Outcome rg_equivalence() {
  const double alpha = 1.0 / 14;
  std::vector<double> Ls;
  for (int i = 0; i <= 120; ++i) Ls.push_back(std::pow(10.0, i / 20.0));
  double worst = 0;
  for (double K0 : {5.0, 7.5, 10.8}) {
    const auto t = integrate_K_of_L(K0, alpha, Ls);
    for (std::size_t i = 0; i < Ls.size(); ++i) worst = std::max(worst, std::abs(t.K_ode[i] - t.K_closed[i]));
  }
  std::vector<double> tail;
  for (int i = 0; i < 20; ++i) tail.push_back(1e5 * std::pow(10.0, i / 19.0));
  const auto t = integrate_K_of_L(7.5, alpha, tail);
  std::vector<double> gaps;
  for (double k : t.K_ode) gaps.push_back(k - kKInfrared);
  const double exponent = -loglog_fit(tail, gaps).slope;
  const double exp_err = std::abs(exponent / (7 * alpha) - 1);
  std::vector<double> Ks;
  for (double L : reference::kSweepL) Ks.push_back(K_closed_form(10.8, alpha, L));
  const double a_hat = discrete_beta(reference::kSweepL, Ks).alpha_hat;
  const double a_err = std::abs(a_hat / alpha - 1);
  const bool pass = worst <= 1e-6 && exp_err <= 0.01 && a_err <= 0.02;
  return {pass, fmt::format("ODE vs closed form max {:.2e} <= 1e-6; tail exponent {:.5f} vs 7 alpha {:.5f} "
                            "({:.2f}% <= 1%); discrete beta alpha {:.5f} ({:.2f}% <= 2%)",
                            worst, exponent, 7 * alpha, 100 * exp_err, a_hat, 100 * a_err)};
}

Outcome modified_flow() {
  StreamRng g(8128, 0, 0);
  double worst_det = 0;
  int trace_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const ModifiedFlowSpec s{5 * g.uniform(), 1e-3 + 2 * g.uniform(), 1e-3 + 2 * g.uniform(),
                             1e-2 + 4 * g.uniform(), 1 + 6 * g.uniform()};
    const auto rep = modified_flow_analysis(s);
    worst_det = std::max(worst_det, std::abs(rep.det - (s.mu * s.nu * (s.r + 1) * (s.r + 1) + s.kappa * s.kappa)));
    trace_ok += rep.trace < 0;
  }
  // A fixed point must be stationary under the flow.
  const ModifiedFlowSpec reference_flow{0.685, 0.003, 0.581, 1.0, 4.0};
  const auto rep = modified_flow_analysis(reference_flow);
  const bool at_22 = rep.fixed_point[0] == 2.0 && rep.fixed_point[1] == 2.0;
  const double residual = std::hypot(rep.fixed_point_residual[0], rep.fixed_point_residual[1]);
  const bool stationary = residual <= 1e-12;
  const bool pass = worst_det <= 1e-10 && trace_ok == 1000 && at_22 && stationary;
  return {pass, fmt::format("det identity max error {:.1e} <= 1e-10; trace < 0 on {}/1000; (2, 2) flow residual "
                            "{:.4f} (stationary needs 0); equilibrium ({:.4f}, {:.4f})",
                            worst_det, trace_ok, residual, rep.equilibrium[0], rep.equilibrium[1])};
}

Outcome survey() {
  bool traces = true, enumeration = true, lengths = true, ratios = true, bounds = true;
  std::string misses;
  for (std::int64_t N = 1; N <= 50; ++N)
    enumeration = enumeration && min_hyperbolic_trace(N).t_min == brute_force_trace(N, 60);
  const auto fixtures = read_survey_fixtures(fs::path(PZLAB_DATA_DIR) / "survey_families.csv");
  if (fixtures.size() != reference::kSurvey.size()) return {false, "fixture row count differs from the table"};
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const auto& ref = reference::kSurvey[i];
    const auto w = min_hyperbolic_trace(fixtures[i].level_N);
    traces = traces && w.t_min == ref.t_min;
    const double ell = geodesic_length(w.t_min);
    lengths = lengths && std::round(ell * 1e4) / 1e4 == ref.ell_min;
    const double R = uv_ir_ratio(fixtures[i].gamma1, ell).R_f;
    if (std::round(R * 100) / 100 != ref.R_f) {
      ratios = false;
      misses += fmt::format(" {} R_f {:.4f} vs {}", fixtures[i].family, R, ref.R_f);
    }
  }
  const auto rep = survey_report(fixtures);
  for (const auto& e : rep.entries) bounds = bounds && e.bound.satisfied;
  bounds = bounds && rep.errors.empty() && rep.entries.size() == 12;
  const bool pass = traces && enumeration && lengths && ratios && bounds;
  return {pass, fmt::format("t_min {}; enumeration N <= 50 {}; ell_min to 4 dp {}; R_f to 2 dp {}{}; "
                            "R_f >= 1/0.685 {}",
                            traces ? "ok" : "MISMATCH", enumeration ? "ok" : "MISMATCH", lengths ? "ok" : "MISMATCH",
                            ratios ? "ok" : "MISMATCH:", misses, bounds ? "ok" : "VIOLATED")};
}

Outcome entropy() {
  const auto s = semicircle_entropy();
  const double target = std::log(2 * std::numbers::pi) - 0.5;
  const double q_err = std::abs(s.quadrature - target);
  StreamRng g(1, 0, 0);
  std::vector<double> ts;
  double t = 20.0;
  for (int i = 0; i < 20000; ++i) {
    t += -std::log(1.0 - g.uniform());
    ts.push_back(t);
  }
  const double h = spacing_entropy(ZeroTable(std::move(ts), "poisson"), 1e9).entropy;
  const bool pass = q_err <= 1e-6 && std::abs(h - 1.0) <= 0.1;
  return {pass, fmt::format("semicircle quadrature {:.9f} vs ln(2 pi) - 1/2 = {:.9f} (error {:.1e} <= 1e-6); "
                            "Poisson spacing entropy {:.4f} in 1.0 +/- 0.1",
                            s.quadrature, target, q_err, h)};
}

Outcome normalization() {
  StreamRng g(99, 0, 0);
  std::size_t below = 0, iff_violations = 0, equal_pairs = 0;
  for (int i = 0; i < 100000; ++i) {
    const double a = std::exp(10 * g.uniform() - 5);
    // One pair in ten is drawn on the diagonal so both sides of the iff occur.
    const double b = g.uniform() < 0.1 ? a : std::exp(10 * g.uniform() - 5);
    equal_pairs += a == b;
    const double K = normalize(a, b).K_norm;
    below += K < 4.0;
    if ((std::abs(K - 4.0) < 1e-9) != (std::abs(a - b) < 1e-9)) ++iff_violations;
  }
  const double d1 = std::round(dP_from_K(3.9) * 100) / 100, d2 = std::round(dP_from_K(3.6) * 100) / 100;
  const bool pass = below == 0 && iff_violations == 0 && d1 == 0.41 && d2 == 0.47;
  return {pass, fmt::format("K_norm < 4 on {} of 1e5 pairs ({} on the diagonal); iff violations {}; "
                            "dP_from_K(3.9) = {:.2f}, dP_from_K(3.6) = {:.2f}",
                            below, equal_pairs, iff_violations, d1, d2)};
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "pzlab_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  std::size_t files = 0;
  std::string differing;
  for (const auto& cmd : cli::all_commands()) {
    const auto a = root / "a", b = root / "b";
    const int ca = cli::run(cmd + " --out " + a.string(), root / "log");
    const int cb = cli::run(cmd + " --out " + b.string(), root / "log");
    const auto fa = cli::data_files(a), fb = cli::data_files(b);
    if (ca != 0 || cb != 0 || fa.empty() || fa != fb) differing += " [" + cmd + "]";
    files += fa.size();
    fs::remove_all(a);
    fs::remove_all(b);
  }
  fs::remove_all(root);
  return {differing.empty(), fmt::format("{} commands, {} CSV/JSON files byte-identical across reruns{}{}",
                                         cli::all_commands().size(), files, differing.empty() ? "" : "; differs:",
                                         differing)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c{
      {"Cantor benchmark", cantor},
      {"Weierstrass benchmark", weierstrass},
      {"Dimension band", dimension_band},
      {"Duality band", duality_band},
      {"Scaling-fit self-inverse", scaling_self_inverse},
      {"Trend property", trend},
      {"RG equivalence", rg_equivalence},
      {"Modified-flow identities", modified_flow},
      {"Survey reproduction", survey},
      {"Entropy closed form", entropy},
      {"Normalization", normalization},
      {"Determinism", determinism},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t first = 1, last = criteria().size();
  if (argc > 1) {
    const long n = std::strtol(argv[1], nullptr, 10);
    if (n < 1 || n > static_cast<long>(criteria().size())) {
      std::cerr << "usage: acceptance [1-" << criteria().size() << "]\n";
      return 2;
    }
    first = last = static_cast<std::size_t>(n);
  }
  int failures = 0;
  for (std::size_t i = first; i <= last; ++i) {
    const auto& c = criteria()[i - 1];
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << fmt::format("{} {:2d} {}: {}\n", o.pass ? "PASS" : "FAIL", i, c.name, o.detail);
  }
  return failures == 0 ? 0 : 1;
}
