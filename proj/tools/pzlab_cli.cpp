// pzlab: command-line pipelines over the pzlab library.
// Exit codes: 0 success, 1 computational failure, 2 input or config error.

#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "CLI11.hpp"
#include "pzlab/duality.hpp"
#include "pzlab/error.hpp"
#include "pzlab/fractal.hpp"
#include "pzlab/modular.hpp"
#include "pzlab/regularity.hpp"
#include "pzlab/report.hpp"
#include "pzlab/rgflow.hpp"
#include "pzlab/scaling.hpp"
#include "pzlab/synthetic.hpp"
#include "pzlab/zeros.hpp"
#include "run_config.hpp"
#include "svg_plot.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace pzlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCompute = 1;
constexpr int kExitInput = 2;

const fs::path kDataDir = PZLAB_DATA_DIR;

// Bands for the validation benchmarks.
constexpr double kCantorLo = 0.61, kCantorHi = 0.65;
constexpr double kWeierstrassLo = 1.43, kWeierstrassHi = 1.53;

struct Context {
  ConfigOverrides flags;
  bool no_timestamp = false;
  RunConfig cfg;

  std::optional<std::string> timestamp() const {
    if (no_timestamp) return std::nullopt;
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::time(nullptr)));
  }

  fs::path out(const std::string& name) const { return cfg.output_dir / name; }

  void write(const std::string& name, const std::string& text) const {
    fs::create_directories(cfg.output_dir);
    write_text_file(out(name), text);
    std::cout << "wrote " << out(name).string() << "\n";
  }

  void write_json(const std::string& name, const json& j) const { write(name, j.dump(2) + "\n"); }
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse:
    case Errc::io:
    case Errc::integrity:
    case Errc::empty_input:
    case Errc::parameter:
      return kExitInput;
    default:
      return kExitCompute;
  }
}

json estimate_json(const DimensionEstimate& d) {
  json j;
  j["value"] = json_number(d.value);
  j["ci_lo"] = json_number(d.ci_lo);
  j["ci_hi"] = json_number(d.ci_hi);
  j["r_squared"] = json_number(d.diagnostics.r_squared);
  j["accepted"] = d.accepted;
  j["flat"] = d.flat;
  j["clamped"] = d.clamped;
  return j;
}

json regularity_json(const RegularityEstimate& r) {
  json j;
  j["H"] = json_number(r.H);
  j["zeta_R"] = json_number(r.zeta_R);
  j["ci_lo"] = json_number(r.ci_lo);
  j["ci_hi"] = json_number(r.ci_hi);
  j["r_squared"] = json_number(r.diagnostics.r_squared);
  j["accepted"] = r.accepted;
  return j;
}

// Three-model fit of one C(beta, L) column, or a skip notice.
json fit_column(const std::vector<double>& Ls, const std::vector<double>& Cs,
                ScalingFit* best_out, std::vector<ScalingFit>* fits_out) {
  json j;
  if (Ls.size() < 6) {
    j["status"] = "skipped";
    j["reason"] = fmt::format("{} records; at least 6 are needed for fitting", Ls.size());
    return j;
  }
  std::vector<ScalingFit> fits;
  for (auto m : {ScalingModel::power, ScalingModel::linear_inv, ScalingModel::log_inv})
    fits.push_back(fit_model(m, Ls, Cs));
  const AicSelection sel = aic_select(fits);
  std::vector<FitReportEntry> entries;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    FitReportEntry e;
    e.fit = fits[i];
    e.delta_aic = fits[i].aic - sel.best.aic;
    try {
      e.cv_mse = loo_cv(fits[i].model, Ls, Cs).mse;
    } catch (const Error&) {
      e.cv_ok = false;
    }
    entries.push_back(e);
  }
  j["status"] = "fitted";
  j["selected"] = std::string(to_string(sel.best.model));
  j["c_inf"] = json_number(sel.best.c_inf);
  j["fits"] = fit_report_json(entries);
  if (best_out) *best_out = sel.best;
  if (fits_out) *fits_out = fits;
  return j;
}

std::string convergence_svg(const std::vector<SweepRecord>& recs, const std::vector<ScalingFit>& f2,
                            const std::vector<ScalingFit>& f4, const std::optional<std::string>& ts) {
  plot::PlotSpec spec;
  spec.title = "Convergence of C(beta, L)";
  spec.x_label = "1/L";
  spec.y_label = "C(beta, L)";
  spec.top_label = "L";
  plot::Series p2{"C(2, L)", {}, {}, "#1f77b4", true, false};
  plot::Series p4{"C(4, L)", {}, {}, "#d62728", true, false};
  double x_max = 0;
  for (const auto& r : recs) {
    p2.x.push_back(1.0 / r.L);
    p2.y.push_back(r.C_beta2);
    p4.x.push_back(1.0 / r.L);
    p4.y.push_back(r.C_beta4);
    x_max = std::max(x_max, 1.0 / r.L);
  }
  spec.series = {p2, p4};
  const char* colors[] = {"#2ca02c", "#9467bd", "#ff7f0e"};
  auto add_fits = [&](const std::vector<ScalingFit>& fits, int beta) {
    for (std::size_t k = 0; k < fits.size(); ++k) {
      plot::Series s{fmt::format("beta={} {}", beta, to_string(fits[k].model)), {}, {}, colors[k], false, false};
      for (int i = 0; i <= 100; ++i) {
        const double x = x_max * i / 100.0;
        s.x.push_back(x);
        s.y.push_back(i == 0 ? fits[k].c_inf : fits[k].predict(1.0 / x));
      }
      spec.series.push_back(s);
    }
    if (!fits.empty()) {
      const double c = aic_select(fits).best.c_inf;
      spec.series.push_back({fmt::format("beta={} C_inf", beta), {0.0, x_max}, {c, c}, "#7f7f7f", false, true});
    }
  };
  add_fits(f2, 2);
  add_fits(f4, 4);
  for (double L : {100.0, 200.0, 500.0, 1000.0, 2000.0, 5000.0})
    spec.top_ticks.push_back({1.0 / L, format_number(L)});
  return plot::render_svg(spec, ts);
}

int cmd_sweep(Context& ctx) {
  const ZeroTable zeros = parse_zero_file(ctx.cfg.zeros_path);
  const SweepResult res = scale_sweep(ctx.cfg.sweep_config(), zeros);

  std::string log;
  for (const auto& s : res.skipped) log += "L=" + format_number(s.L) + ": " + s.reason + "\n";

  std::vector<double> Ls, C2, C4;
  for (const auto& r : res.records) {
    Ls.push_back(r.L);
    C2.push_back(r.C_beta2);
    C4.push_back(r.C_beta4);
  }
  std::vector<ScalingFit> f2, f4;
  json report;
  report["config"] = ctx.cfg.to_json();
  report["records"] = res.records.size();
  report["skipped"] = res.skipped.size();
  report["beta2"] = fit_column(Ls, C2, nullptr, &f2);
  report["beta4"] = fit_column(Ls, C4, nullptr, &f4);
  if (report["beta2"]["status"] == "skipped") {
    std::cout << "notice: fits skipped, " << report["beta2"]["reason"].get<std::string>() << "\n";
    log += "fit skipped: " + report["beta2"]["reason"].get<std::string>() + "\n";
  }

  ctx.write("sweep.csv", sweep_csv(res.records));
  ctx.write("sweep_skipped.log", log);
  ctx.write_json("fit_report.json", report);
  ctx.write("convergence.svg", convergence_svg(res.records, f2, f4, ctx.timestamp()));
  std::cout << res.records.size() << " records, " << res.skipped.size() << " scales skipped\n";
  if (res.records.empty()) {
    std::cerr << "error: every scale was skipped; see sweep_skipped.log\n";
    return kExitCompute;
  }
  return kExitOk;
}

int cmd_validate(Context& ctx, const std::string& kind) {
  json j;
  bool all_pass = true;
  if (kind == "cantor" || kind == "all") {
    const double v = box_dimension(cantor_points(8)).value;
    const bool pass = v >= kCantorLo && v <= kCantorHi;
    all_pass = all_pass && pass;
    j["cantor"] = {{"value", json_number(v)}, {"band", {kCantorLo, kCantorHi}}, {"pass", pass}};
    std::cout << fmt::format("cantor: box dimension {:.4f} in [{}, {}]: {}\n", v, kCantorLo, kCantorHi,
                             pass ? "PASS" : "FAIL");
  }
  if (kind == "weierstrass" || kind == "all") {
    const double v = holder_estimate(variation_profile(weierstrass_field(0.5, 40, 4097))).zeta_R;
    const bool pass = v >= kWeierstrassLo && v <= kWeierstrassHi;
    all_pass = all_pass && pass;
    j["weierstrass"] = {{"value", json_number(v)}, {"band", {kWeierstrassLo, kWeierstrassHi}}, {"pass", pass}};
    std::cout << fmt::format("weierstrass: zeta_R {:.4f} in [{}, {}]: {}\n", v, kWeierstrassLo,
                             kWeierstrassHi, pass ? "PASS" : "FAIL");
  }
  j["all_pass"] = all_pass;
  ctx.write_json("validate_" + kind + ".json", j);
  return all_pass ? kExitOk : kExitCompute;
}

int cmd_survey(Context& ctx, const fs::path& fixtures, double kappa) {
  const SurveyReport rep = survey_report(read_survey_fixtures(fixtures), kappa);
  json j;
  j["kappa_ir"] = json_number(kappa);
  j["crossover"] = json_number(dual_bound(0.0, kappa).crossover);
  auto& rows = j["rows"] = json::array();
  for (const auto& e : rep.entries) {
    json r;
    r["family"] = e.row.family;
    r["N"] = e.row.level_N;
    r["witness"] = {{e.row.witness[0][0], e.row.witness[0][1]}, {e.row.witness[1][0], e.row.witness[1][1]}};
    r["R_f"] = json_number(e.row.R_f);
    r["bound_ok"] = e.bound.satisfied;
    r["margin"] = json_number(e.bound.margin);
    r["product"] = json_number(e.product);
    r["product_bound"] = json_number(e.product_bound);
    r["product_ok"] = e.product_ok;
    rows.push_back(r);
  }
  auto& errs = j["errors"] = json::array();
  for (const auto& e : rep.errors) {
    errs.push_back({{"family", e.family}, {"N", e.level_N}, {"message", e.message}});
    std::cerr << "row error: " << e.family << ": " << e.message << "\n";
  }
  ctx.write("survey.csv", survey_csv(rep));
  ctx.write_json("survey_bounds.json", j);
  std::size_t ok = 0;
  for (const auto& e : rep.entries) ok += e.bound.satisfied;
  std::cout << fmt::format("{} rows, {} satisfy R_f >= 1/kappa, {} row errors\n", rep.entries.size(), ok,
                           rep.errors.size());
  return kExitOk;
}

int cmd_rg_integrate(Context& ctx, double k0, double alpha, double l_max, int points) {
  if (points < 2) fail(Errc::parameter, "--points must be at least 2");
  if (!(l_max > 1.0)) fail(Errc::parameter, "--lmax must exceed 1");
  std::vector<double> Ls;
  for (int i = 0; i < points; ++i) Ls.push_back(std::pow(l_max, static_cast<double>(i) / (points - 1)));
  Ls.back() = l_max;
  const KTrajectory traj = integrate_K_of_L(k0, alpha, Ls);
  double worst = 0;
  for (std::size_t i = 0; i < Ls.size(); ++i) worst = std::max(worst, std::abs(traj.K_ode[i] - traj.K_closed[i]));
  const ClosedFormComparison cmp = compare_closed_forms(k0, alpha, Ls);
  json j;
  j["K0"] = json_number(k0);
  j["alpha"] = json_number(alpha);
  j["L_max"] = json_number(l_max);
  j["K_final"] = json_number(traj.K_ode.back());
  j["K_closed_final"] = json_number(traj.K_closed.back());
  j["max_ode_closed_difference"] = json_number(worst);
  j["outside_basin"] = traj.outside_basin;
  j["alternate_form_at_L1"] = json_number(cmp.alternate_at_L1);
  j["alternate_form_max_difference"] = json_number(cmp.max_abs_difference);
  ctx.write("rg_trajectory.csv", k_trajectory_csv(traj));
  ctx.write_json("rg_integrate.json", j);
  std::cout << fmt::format("K({}) = {:.9f} (closed form {:.9f})\n", format_number(l_max), traj.K_ode.back(),
                           traj.K_closed.back());
  return kExitOk;
}

int cmd_rg_fit_beta(Context& ctx, const fs::path& sweep_path) {
  const auto recs = parse_sweep_csv(read_text_file(sweep_path));
  const BetaEstimate est = discrete_beta(recs);
  json j;
  j["source"] = sweep_path.string();
  j["alpha_hat"] = json_number(est.alpha_hat);
  j["b_hat"] = json_number(est.b_hat);
  j["n_differences"] = est.n_differences;
  ctx.write_json("beta_fit.json", j);
  std::cout << fmt::format("alpha_hat = {:.6f}, b_hat = 7 alpha_hat = {:.6f}\n", est.alpha_hat, est.b_hat);
  return kExitOk;
}

int cmd_rg_modified(Context& ctx, const ModifiedFlowSpec& spec, std::array<double, 2> I0, double t_max) {
  const StabilityReport rep = modified_flow_analysis(spec);
  const FlowTrajectory traj = integrate_modified_flow(spec, I0, t_max);
  ctx.write_json("stability.json", stability_json(spec, rep));
  ctx.write("flow_trajectory.csv", flow_trajectory_csv(traj));

  plot::PlotSpec p;
  p.title = "Modified flow phase portrait";
  p.x_label = "I_P";
  p.y_label = "I_Z";
  p.equal_aspect = true;
  p.series.push_back({"trajectory", traj.I_P, traj.I_Z, "#1f77b4", false, false});
  p.series.push_back({"start", {I0[0]}, {I0[1]}, "#2ca02c", true, false});
  p.series.push_back({"(K r/(1+r), K/(1+r))", {rep.fixed_point[0]}, {rep.fixed_point[1]}, "#d62728", true, false});
  p.series.push_back({"-M^-1 b", {rep.equilibrium[0]}, {rep.equilibrium[1]}, "#000000", true, false});
  ctx.write("phase.svg", plot::render_svg(p, ctx.timestamp()));
  std::cout << fmt::format("det = {:.6f}, trace = {:.6f}, fixed point ({}, {}), equilibrium ({:.6f}, {:.6f})\n",
                           rep.det, rep.trace, format_number(rep.fixed_point[0]),
                           format_number(rep.fixed_point[1]), rep.equilibrium[0], rep.equilibrium[1]);
  return kExitOk;
}

PointSet residue_primes(const RunConfig& cfg, double L) {
  if (!(L >= 2.0)) fail(Errc::parameter, "--L must be at least 2");
  return select_residues(sieve_primes(static_cast<std::uint64_t>(std::floor(L))), cfg.residues);
}

int cmd_dim(Context& ctx, double L) {
  const PointSet subset = residue_primes(ctx.cfg, L);
  const DimensionEstimate d = box_dimension(subset);
  json j;
  j["L"] = json_number(L);
  j["points"] = subset.size();
  j["d_P"] = estimate_json(d);
  ctx.write_json("dim.json", j);
  std::cout << fmt::format("d_P(L={}) = {:.4f} from {} primes\n", format_number(L), d.value, subset.size());
  return kExitOk;
}

SampledField potential_at(const Context& ctx, double L) {
  if (!(L > 0.0)) fail(Errc::parameter, "--L must be positive");
  const ZeroTable zeros = parse_zero_file(ctx.cfg.zeros_path);
  return zero_potential(zeros, L, ctx.cfg.sigma, default_potential_step(L), Boundary::periodic);
}

int cmd_zr(Context& ctx, double L) {
  const SampledField V = potential_at(ctx, L);
  const VariationProfile prof = variation_profile(V);
  const RegularityEstimate est = holder_estimate(prof);
  json j;
  j["L"] = json_number(L);
  j["sigma"] = json_number(ctx.cfg.sigma);
  j["variation"] = regularity_json(est);
  j["wavelet"] = regularity_json(wavelet_holder(V));
  ctx.write("profile.csv", profile_csv(prof));
  ctx.write_json("zr.json", j);
  std::cout << fmt::format("zeta_R(L={}) = {:.4f} (H = {:.4f})\n", format_number(L), est.zeta_R, est.H);
  return kExitOk;
}

json spacing_json(const SpacingEntropy& s) {
  json j;
  j["entropy"] = s.degenerate ? json(nullptr) : json_number(s.entropy);
  j["n_spacings"] = s.n_spacings;
  j["bin_width"] = json_number(s.bin_width);
  j["degenerate"] = s.degenerate;
  return j;
}

int cmd_entropy(Context& ctx, const std::string& kind, double L, std::optional<double> t_max) {
  json j;
  if (kind == "spacings") {
    const ZeroTable zeros = parse_zero_file(ctx.cfg.zeros_path);
    const double top = t_max.value_or(zeros.gammas().back());
    j = spacing_json(spacing_entropy(zeros, top));
    j["t_max"] = json_number(top);
    std::cout << "spacing entropy = " << j["entropy"].dump() << " nats\n";
  } else if (kind == "psd") {
    const double h = spectral_entropy_psd(potential_at(ctx, L));
    j["L"] = json_number(L);
    j["sigma"] = json_number(ctx.cfg.sigma);
    j["psd_entropy"] = json_number(h);
    std::cout << fmt::format("PSD entropy = {:.6f} nats\n", h);
  } else {
    const SemicircleEntropy s = semicircle_entropy();
    j["closed_form"] = json_number(s.closed_form);
    j["quadrature"] = json_number(s.quadrature);
    std::cout << fmt::format("semicircle entropy = {:.6f} nats (quadrature {:.9f})\n", s.closed_form, s.quadrature);
  }
  ctx.write_json("entropy_" + kind + ".json", j);
  return kExitOk;
}

int cmd_compress(Context& ctx, std::uint64_t N) {
  const ComplexityBits c = complexity_estimate(N);
  const LzComplexity lz = lz_complexity(indicator_sequence(sieve_primes(N), N));
  json j;
  j["N"] = N;
  j["prime_count"] = c.prime_count;
  j["exact_bits"] = json_number(c.exact_bits);
  j["asymptotic_bits"] = json_number(c.asymptotic_bits);
  j["lz_phrases"] = lz.phrases;
  j["lz_bits_per_symbol"] = json_number(lz.rate_bits_per_symbol);
  ctx.write_json("compress.json", j);
  std::cout << fmt::format("pi({}) = {}, log2 C(N, pi(N)) = {:.3f} bits, LZ78 {:.4f} bits/symbol\n", N,
                           c.prime_count, c.exact_bits, lz.rate_bits_per_symbol);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pzlab: prime/zero duality measurements and reports"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  auto& f = ctx.flags;
  app.add_option("--config", f.config, "JSON run configuration");
  app.add_option("--zeros", f.zeros, "zeta zeros file, one ordinate per line");
  app.add_option("--out", f.out, "output directory");
  app.add_option("--seed", f.seed, "master RNG seed");
  app.add_option("--bootstrap", f.bootstrap, "bootstrap resamples (>= 100)");
  app.add_option("--sigma", f.sigma, "Gaussian width of the zero potential");
  app.add_option("--mod", f.modulus, "residue modulus");
  app.add_option("--residues", f.residues, "residue classes, comma separated")->delimiter(',');
  app.add_option("--scales", f.scales, "scales L, comma separated and ascending")->delimiter(',');
  app.add_flag("--no-timestamp", ctx.no_timestamp, "omit the timestamp comment from SVG output");

  auto* sweep = app.add_subcommand("sweep", "scale sweep, three-model fits and convergence plot");

  std::string validate_kind = "all";
  auto* validate = app.add_subcommand("validate", "Cantor and Weierstrass benchmarks");
  validate->add_option("kind", validate_kind, "cantor, weierstrass or all")
      ->check(CLI::IsMember({"cantor", "weierstrass", "all"}));

  fs::path fixtures = kDataDir / "survey_families.csv";
  double kappa_ir = kKappaIR;
  auto* survey = app.add_subcommand("survey", "Gamma_0(N) survey and bound checks");
  survey->add_option("--fixtures", fixtures, "family fixture CSV (family,k,N,gamma1)");
  survey->add_option("--kappa", kappa_ir, "kappa_IR for the bound checks");

  auto* rg = app.add_subcommand("rg", "RG flow integration, beta fit and modified flow");
  rg->require_subcommand(1);
  double k0 = 10.8, alpha = 1.0 / 14, l_max = 1e9;
  int points = 200;
  auto* rg_int = rg->add_subcommand("integrate", "integrate dK/dlnL and compare with the closed form");
  rg_int->add_option("--k0", k0, "K at L = 1");
  rg_int->add_option("--alpha", alpha, "flow coefficient");
  rg_int->add_option("--lmax", l_max, "largest L");
  rg_int->add_option("--points", points, "log-spaced samples");
  std::optional<fs::path> sweep_path;
  auto* rg_fit = rg->add_subcommand("fit-beta", "discrete beta function from a sweep CSV");
  rg_fit->add_option("--sweep", sweep_path, "sweep CSV (default <out>/sweep.csv)");
  ModifiedFlowSpec flow{0.685, 0.003, 0.581, 1.0, 4.0};
  std::array<double, 2> I0{3.0, 1.0};
  double t_max = 100.0;
  auto* rg_mod = rg->add_subcommand("modified", "stability of the four-parameter linear flow");
  rg_mod->add_option("--kappa", flow.kappa);
  rg_mod->add_option("--mu", flow.mu);
  rg_mod->add_option("--nu", flow.nu);
  rg_mod->add_option("--r", flow.r);
  rg_mod->add_option("--kinf", flow.K_inf);
  rg_mod->add_option("--ip0", I0[0]);
  rg_mod->add_option("--iz0", I0[1]);
  rg_mod->add_option("--tmax", t_max);

  double L = 1000.0;
  auto* dim = app.add_subcommand("dim", "box dimension of the residue-class primes up to L");
  dim->add_option("--L", L, "scale");
  auto* zr = app.add_subcommand("zr", "regularity index of the zero potential on [0, L]");
  zr->add_option("--L", L, "scale");

  auto* entropy = app.add_subcommand("entropy", "spacing, PSD and semicircle entropies");
  entropy->require_subcommand(1);
  std::optional<double> entropy_tmax;
  auto* ent_sp = entropy->add_subcommand("spacings", "unfolded zero-spacing entropy");
  ent_sp->add_option("--tmax", entropy_tmax, "largest ordinate used");
  auto* ent_psd = entropy->add_subcommand("psd", "periodogram entropy of the zero potential");
  ent_psd->add_option("--L", L, "scale");
  auto* ent_sc = entropy->add_subcommand("semicircle", "semicircle closed form and quadrature");

  std::uint64_t compress_N = 100000;
  auto* compress = app.add_subcommand("compress", "binomial and LZ78 complexity of the primes");
  compress->add_option("--N", compress_N, "sequence length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    ctx.cfg = load_run_config(ctx.flags, kDataDir / "zeros_first.txt");
    if (*sweep) return cmd_sweep(ctx);
    if (*validate) return cmd_validate(ctx, validate_kind);
    if (*survey) return cmd_survey(ctx, fixtures, kappa_ir);
    if (*rg_int) return cmd_rg_integrate(ctx, k0, alpha, l_max, points);
    if (*rg_fit) return cmd_rg_fit_beta(ctx, sweep_path.value_or(ctx.out("sweep.csv")));
    if (*rg_mod) return cmd_rg_modified(ctx, flow, I0, t_max);
    if (*dim) return cmd_dim(ctx, L);
    if (*zr) return cmd_zr(ctx, L);
    if (*ent_sp) return cmd_entropy(ctx, "spacings", L, entropy_tmax);
    if (*ent_psd) return cmd_entropy(ctx, "psd", L, entropy_tmax);
    if (*ent_sc) return cmd_entropy(ctx, "semicircle", L, entropy_tmax);
    if (*compress) return cmd_compress(ctx, compress_N);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitInput;
}
