#pragma once

// Gamma_0(N) minimal hyperbolic traces, closed-geodesic lengths and the
// spectral/geometric ratio bounds built on them.

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace pzlab {

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

struct TraceWitness {
  std::int64_t t_min = 0;
  IntMatrix2 witness{};  // [[a, b], [N, t_min - a]], determinant 1
};

/// Smallest t >= 3 with a(t - a) = 1 (mod N) for some a.
TraceWitness min_hyperbolic_trace(std::int64_t N);

/// 2 arccosh(t / 2).
double geodesic_length(std::int64_t t);

struct UvIrRatio {
  double R_f = 0.0;
  double kappa_geo = 0.0;
};

UvIrRatio uv_ir_ratio(double gamma1, double ell_min);

/// Default kappa_IR for bound checks (RG-fit value).
inline constexpr double kKappaIR = 0.685;

struct SurveyRow {
  std::string family;
  int weight_k = 0;
  std::int64_t level_N = 1;
  std::int64_t t_min = 0;
  double ell_min = 0.0;
  double gamma1 = 0.0;
  double R_f = 0.0;
  double kappa_geo = 0.0;
  IntMatrix2 witness{};
};

struct BoundCheck {
  bool satisfied = false;
  double margin = 0.0;
};

/// R_f >= 1 / kappa_ir.
BoundCheck odd_positive_check(const SurveyRow& row, double kappa_ir);

enum class BoundRegime { quantum, geometric };

struct DualBoundReport {
  double delta_P = 0.0;
  double kappa_ir = 0.0;
  double bound = 0.0;
  BoundRegime regime = BoundRegime::quantum;
  double crossover = 0.0;  // 1/sqrt(2)
};

/// max(1/(2 kappa), delta_P^2 / kappa).
DualBoundReport dual_bound(double delta_P, double kappa_ir);

/// ell_min / kappa: the product bound when delta_P = sqrt(ell_min).
double family_product_bound(double ell_min, double kappa_ir);

struct SurveyFixture {
  std::string family;
  int weight_k = 0;
  std::int64_t level_N = 1;
  double gamma1 = 0.0;
};

struct SurveyEntry {
  SurveyRow row;
  BoundCheck bound;
  double product = 0.0;        // sqrt(ell_min) * gamma1
  double product_bound = 0.0;  // dual bound at delta_P = sqrt(ell_min)
  bool product_ok = false;
};

struct SurveyError {
  std::string family;
  std::int64_t level_N = 0;
  std::string message;
};

struct SurveyReport {
  std::vector<SurveyEntry> entries;  // ordered by (k, N)
  std::vector<SurveyError> errors;
};

SurveyReport survey_report(const std::vector<SurveyFixture>& fixtures,
                           double kappa_ir = kKappaIR);

/// CSV with header `family,k,N,gamma1`.
std::vector<SurveyFixture> read_survey_fixtures(const std::filesystem::path& path);

}  // namespace pzlab
