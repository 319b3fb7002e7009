#pragma once

// Quadratic RG flow of the dual sum K, its closed-form solution, the
// discrete beta-function estimate, coupling relations, and the
// four-parameter linear flow for (I_P, I_Z).

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "pzlab/duality.hpp"

namespace pzlab {

inline constexpr double kKInfrared = 4.0;
inline constexpr double kKUltraviolet = 11.0;

/// beta_K = dK/d ln mu = -alpha (K - 4)(K - 11).
double beta_K(double K, double alpha);

/// Separable solution of dK/d ln L = alpha (K-4)(K-11) with K(1) = K0:
/// K = 4 + 7 (K0-4) / ((K0-4) + (11-K0) L^{7 alpha}).
double K_closed_form(double K0, double alpha, double L);

/// The alternative expression 4 + (K0-4)(K0-11) / ((K0-11) - (K0-4) L^{7 alpha});
/// it does not satisfy K(1) = K0 and is kept only for the comparison report.
double K_alternate_form(double K0, double alpha, double L);

struct KTrajectory {
  std::vector<double> lnL;
  std::vector<double> K_ode;
  std::vector<double> K_closed;
  bool outside_basin = false;  // K0 not in (4, 11)
};

/// Integrates dK/d ln L = alpha (K-4)(K-11) from L = 1 with an adaptive
/// Dormand-Prince 5(4) stepper (relative tolerance 1e-9). L_values must be
/// >= 1 and ascending.
KTrajectory integrate_K_of_L(double K0, double alpha, std::span<const double> L_values);

struct ClosedFormComparison {
  double alternate_at_L1 = 0.0;
  double K0 = 0.0;
  double max_abs_difference = 0.0;  // alternate vs separable over the L grid
};

ClosedFormComparison compare_closed_forms(double K0, double alpha,
                                          std::span<const double> L_values);

struct BetaEstimate {
  double alpha_hat = 0.0;
  double b_hat = 0.0;  // 7 alpha_hat
  std::size_t n_differences = 0;
};

/// beta_i = (K_{i+1} - K_i) / (ln L_{i+1} - ln L_i) fitted through the
/// origin to alpha (Kbar - 4)(Kbar - 11) at midpoints Kbar (positive alpha
/// means K relaxes toward 4 as L grows).
BetaEstimate discrete_beta(std::span<const double> Ls, std::span<const double> Ks);
BetaEstimate discrete_beta(std::span<const SweepRecord> records);

double b_from_couplings(double lambda, double g, double C);
double alpha_from_b(double b, double K_uv, double K_ir);

struct ModifiedFlowSpec {
  double kappa = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double r = 1.0;
  double K_inf = 4.0;

  /// Throws Errc::parameter unless mu, nu, r > 0 and all are finite.
  void validate() const;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

struct StabilityReport {
  Matrix2 M{};
  double trace = 0.0;
  double det = 0.0;
  std::array<std::complex<double>, 2> eigenvalues{};
  std::array<double, 2> eigen_real_parts{};
  double b_eff = 0.0;
  /// (K_inf r/(1+r), K_inf/(1+r)): the sum and asymmetry terms vanish here,
  /// but the kappa rotation does not, so it is stationary only for kappa = 0.
  std::array<double, 2> fixed_point{};
  std::array<double, 2> fixed_point_residual{};  // M I* + b at fixed_point
  std::array<double, 2> equilibrium{};           // -M^{-1} b, the actual stationary state
};

Matrix2 flow_matrix(const ModifiedFlowSpec& spec);

StabilityReport modified_flow_analysis(const ModifiedFlowSpec& spec);

struct FlowTrajectory {
  std::vector<double> t;
  std::vector<double> I_P;
  std::vector<double> I_Z;
};

/// Solves dI/dt = M I + K_inf mu (1, 1), sampled at n_samples + 1 evenly
/// spaced times on [0, t_max].
FlowTrajectory integrate_modified_flow(const ModifiedFlowSpec& spec, std::array<double, 2> I0,
                                       double t_max, std::size_t n_samples = 200);

}  // namespace pzlab
