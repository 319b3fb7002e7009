#include "pzlab/rgflow.hpp"

#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "pzlab/error.hpp"

namespace pzlab {

namespace odeint = boost::numeric::odeint;

double beta_K(double K, double alpha) {
  return -alpha * (K - kKInfrared) * (K - kKUltraviolet);
}

double K_closed_form(double K0, double alpha, double L) {
  const double gap = kKUltraviolet - kKInfrared;
  if (K0 == kKInfrared) return kKInfrared;
  const double growth = std::pow(L, gap * alpha);
  return kKInfrared + gap * (K0 - kKInfrared) /
                          ((K0 - kKInfrared) + (kKUltraviolet - K0) * growth);
}

double K_alternate_form(double K0, double alpha, double L) {
  const double growth = std::pow(L, (kKUltraviolet - kKInfrared) * alpha);
  return kKInfrared + (K0 - kKInfrared) * (K0 - kKUltraviolet) /
                          ((K0 - kKUltraviolet) - (K0 - kKInfrared) * growth);
}

namespace {

void check_L_grid(std::span<const double> L_values) {
  if (L_values.empty()) fail(Errc::parameter, "no L values");
  for (std::size_t i = 0; i < L_values.size(); ++i) {
    if (!(L_values[i] >= 1.0)) fail(Errc::parameter, "L values must be >= 1");
    if (i > 0 && !(L_values[i - 1] < L_values[i]))
      fail(Errc::parameter, "L values must be ascending");
  }
}

}  // namespace

KTrajectory integrate_K_of_L(double K0, double alpha, std::span<const double> L_values) {
  check_L_grid(L_values);
  KTrajectory traj;
  traj.outside_basin = !(K0 > kKInfrared && K0 < kKUltraviolet);

  std::vector<double> times;
  times.reserve(L_values.size() + 1);
  const bool prepend = L_values.front() > 1.0;
  if (prepend) times.push_back(0.0);
  for (double L : L_values) times.push_back(std::log(L));

  using State = std::array<double, 1>;
  auto rhs = [alpha](const State& k, State& dk, double) {
    dk[0] = alpha * (k[0] - kKInfrared) * (k[0] - kKUltraviolet);
  };
  State state{K0};
  std::vector<double> values;
  values.reserve(times.size());
  auto stepper = odeint::make_dense_output(1e-12, 1e-9, odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_times(stepper, rhs, state, times.begin(), times.end(), 1e-3,
                            [&](const State& k, double) {
                              if (!std::isfinite(k[0]))
                                fail(Errc::integration, "K trajectory diverged");
                              values.push_back(k[0]);
                            });
  } catch (const odeint::step_adjustment_error& e) {
    fail(Errc::integration, e.what());
  }
  const std::size_t skip = prepend ? 1 : 0;
  for (std::size_t i = 0; i < L_values.size(); ++i) {
    traj.lnL.push_back(times[i + skip]);
    traj.K_ode.push_back(values[i + skip]);
    traj.K_closed.push_back(K_closed_form(K0, alpha, L_values[i]));
  }
  return traj;
}

ClosedFormComparison compare_closed_forms(double K0, double alpha,
                                          std::span<const double> L_values) {
  check_L_grid(L_values);
  ClosedFormComparison out;
  out.K0 = K0;
  out.alternate_at_L1 = K_alternate_form(K0, alpha, 1.0);
  for (double L : L_values)
    out.max_abs_difference = std::max(
        out.max_abs_difference, std::abs(K_alternate_form(K0, alpha, L) - K_closed_form(K0, alpha, L)));
  return out;
}

BetaEstimate discrete_beta(std::span<const double> Ls, std::span<const double> Ks) {
  if (Ls.size() != Ks.size()) fail(Errc::parameter, "L and K lengths differ");
  if (Ls.size() < 6) fail(Errc::parameter, "discrete beta needs at least 6 records");
  for (std::size_t i = 1; i < Ls.size(); ++i)
    if (!(Ls[i - 1] < Ls[i]) || !(Ls[i - 1] > 0.0))
      fail(Errc::integrity, "L values are not strictly ascending");
  double sbg = 0.0, sgg = 0.0;
  for (std::size_t i = 0; i + 1 < Ls.size(); ++i) {
    const double beta = (Ks[i + 1] - Ks[i]) / (std::log(Ls[i + 1]) - std::log(Ls[i]));
    const double kbar = 0.5 * (Ks[i] + Ks[i + 1]);
    const double g = (kbar - kKInfrared) * (kbar - kKUltraviolet);
    sbg += beta * g;
    sgg += g * g;
  }
  BetaEstimate out;
  out.n_differences = Ls.size() - 1;
  out.alpha_hat = sgg > 0.0 ? sbg / sgg : 0.0;
  out.b_hat = (kKUltraviolet - kKInfrared) * out.alpha_hat;
  return out;
}

BetaEstimate discrete_beta(std::span<const SweepRecord> records) {
  std::vector<double> Ls, Ks;
  for (const auto& r : records) {
    Ls.push_back(r.L);
    Ks.push_back(r.K);
  }
  return discrete_beta(Ls, Ks);
}

double b_from_couplings(double lambda, double g, double C) {
  const double radicand = lambda + g * C;
  if (!(radicand >= 0.0)) fail(Errc::domain, "lambda + g C must be nonnegative");
  return std::sqrt(radicand);
}

double alpha_from_b(double b, double K_uv, double K_ir) {
  if (!(K_uv > K_ir)) fail(Errc::domain, "K_uv must exceed K_ir");
  return b / (K_uv - K_ir);
}

void ModifiedFlowSpec::validate() const {
  for (double v : {kappa, mu, nu, r, K_inf})
    if (!std::isfinite(v)) fail(Errc::parameter, "flow parameters must be finite");
  if (!(mu > 0.0) || !(nu > 0.0) || !(r > 0.0))
    fail(Errc::parameter, "mu, nu and r must be positive");
}

Matrix2 flow_matrix(const ModifiedFlowSpec& s) {
  return {{{-s.mu - s.nu, -s.kappa - s.mu + s.nu * s.r},
           {s.kappa - s.mu + s.nu * s.r, -s.mu - s.nu * s.r * s.r}}};
}

StabilityReport modified_flow_analysis(const ModifiedFlowSpec& spec) {
  spec.validate();
  StabilityReport rep;
  rep.M = flow_matrix(spec);
  const auto& M = rep.M;
  rep.trace = M[0][0] + M[1][1];
  rep.det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  const double identity = spec.mu * spec.nu * (spec.r + 1.0) * (spec.r + 1.0) +
                          spec.kappa * spec.kappa;
  const double scale = std::abs(M[0][0] * M[1][1]) + std::abs(M[0][1] * M[1][0]) + 1.0;
  if (std::abs(rep.det - identity) > 1e-12 * scale)
    fail(Errc::parameter, "determinant identity violated");

  const double half = 0.5 * rep.trace;
  const double disc = half * half - rep.det;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    rep.eigenvalues = {std::complex<double>(half + root, 0.0),
                       std::complex<double>(half - root, 0.0)};
  } else {
    const double root = std::sqrt(-disc);
    rep.eigenvalues = {std::complex<double>(half, root), std::complex<double>(half, -root)};
  }
  rep.eigen_real_parts = {rep.eigenvalues[0].real(), rep.eigenvalues[1].real()};
  rep.b_eff = -std::max(rep.eigen_real_parts[0], rep.eigen_real_parts[1]);
  rep.fixed_point = {spec.K_inf * spec.r / (1.0 + spec.r), spec.K_inf / (1.0 + spec.r)};

  const double drive = spec.K_inf * spec.mu;
  rep.equilibrium = {-(M[1][1] * drive - M[0][1] * drive) / rep.det,
                     -(-M[1][0] * drive + M[0][0] * drive) / rep.det};
  const auto& p = rep.fixed_point;
  rep.fixed_point_residual = {M[0][0] * p[0] + M[0][1] * p[1] + drive,
                              M[1][0] * p[0] + M[1][1] * p[1] + drive};
  return rep;
}

FlowTrajectory integrate_modified_flow(const ModifiedFlowSpec& spec, std::array<double, 2> I0,
                                       double t_max, std::size_t n_samples) {
  spec.validate();
  if (!(t_max > 0.0)) fail(Errc::parameter, "t_max must be positive");
  if (n_samples < 1) fail(Errc::parameter, "need at least one sample interval");
  const Matrix2 M = flow_matrix(spec);
  const double drive = spec.K_inf * spec.mu;
  using State = std::array<double, 2>;
  auto rhs = [&](const State& I, State& dI, double) {
    dI[0] = M[0][0] * I[0] + M[0][1] * I[1] + drive;
    dI[1] = M[1][0] * I[0] + M[1][1] * I[1] + drive;
  };
  std::vector<double> times(n_samples + 1);
  for (std::size_t i = 0; i <= n_samples; ++i)
    times[i] = t_max * static_cast<double>(i) / static_cast<double>(n_samples);
  times.back() = t_max;

  FlowTrajectory traj;
  State state = I0;
  auto stepper = odeint::make_dense_output(1e-12, 1e-10, odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_times(stepper, rhs, state, times.begin(), times.end(), 1e-3,
                            [&](const State& I, double t) {
                              if (!std::isfinite(I[0]) || !std::isfinite(I[1]))
                                fail(Errc::integration, "flow trajectory diverged");
                              traj.t.push_back(t);
                              traj.I_P.push_back(I[0]);
                              traj.I_Z.push_back(I[1]);
                            });
  } catch (const odeint::step_adjustment_error& e) {
    fail(Errc::integration, e.what());
  }
  return traj;
}

}  // namespace pzlab
