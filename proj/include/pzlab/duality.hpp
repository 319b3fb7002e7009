#pragma once

// The duality measure K = 1/d_P + 1/zeta_R, its scale sweep, the geometric
// normalisation, and the information-density estimators (binomial
// complexity, LZ78 parsing, spacing and semicircle entropies).

#include <cstdint>
#include <string>
#include <vector>

#include "pzlab/arith.hpp"
#include "pzlab/fractal.hpp"
#include "pzlab/regularity.hpp"
#include "pzlab/zeros.hpp"

namespace pzlab {

/// |zeta(1/2)|, stored literally.
inline constexpr double kAbsZetaHalf = 1.4603545;

struct SweepRecord {
  double L = 0.0;
  DimensionEstimate d_P;
  RegularityEstimate zeta_R;
  double K = 0.0;
  double C_beta2 = 0.0;
  double C_beta4 = 0.0;
};

struct SkippedScale {
  double L;
  std::string reason;
};

struct SweepConfig {
  std::vector<double> scales;
  ResidueSpec residues = ResidueSpec::mod16_quarter();
  double sigma = 0.8;
  std::size_t bootstrap_n = 1000;
  std::uint64_t seed = 20260101;
  std::size_t min_points = 30;
  std::size_t min_zeros = 10;
  BoxDimensionOptions box{};
  VariationOptions variation{};
};

struct SweepResult {
  std::vector<SweepRecord> records;  // ascending L
  std::vector<SkippedScale> skipped;
};

/// The forty scales L = 100 ... 2000 of the reference sweep.
std::vector<double> reference_scales();

double duality_K(double d_P, double zeta_R);

/// Builds a record with K = 1/d + 1/z, C(2) = 2K and C(4) = 4K.
SweepRecord make_record(double L, const DimensionEstimate& d_P, const RegularityEstimate& zeta_R);

/// Per-scale estimates with residual-bootstrap intervals. Scale i uses
/// random trials 2i (d_P) and 2i+1 (zeta_R) of the configured seed.
SweepResult scale_sweep(const SweepConfig& config, const ZeroTable& zeros);

struct InfoDensities {
  double I_P = 0.0;
  double I_Z = 0.0;
  double gamma_norm = 0.0;
  double K_norm = 0.0;
};

InfoDensities normalize(double I_P, double I_Z);

/// d_P = 1 / (K - |zeta(1/2)|).
double dP_from_K(double K);

struct ComplexityBits {
  std::uint64_t prime_count = 0;
  double exact_bits = 0.0;       // log2 binom(N, pi(N))
  double asymptotic_bits = 0.0;  // N log2(ln N) / ln N
};

ComplexityBits complexity_estimate(std::uint64_t N);

struct LzComplexity {
  std::size_t phrases = 0;
  double rate_bits_per_symbol = 0.0;
};

/// LZ78 incremental parse; a trailing phrase that repeats an earlier one
/// still counts.
LzComplexity lz_complexity(const BitSequence& bits);

struct SpacingEntropy {
  double entropy = 0.0;  // nats
  std::size_t n_spacings = 0;
  double bin_width = 0.0;
  bool degenerate = false;  // zero spread; entropy holds the sentinel
};

inline constexpr double kEntropySentinel = -1.0e300;
inline constexpr std::size_t kUnfoldWindow = 50;

/// Differential entropy of unfolded nearest-neighbour spacings of the zeros
/// below t_max: spacings are divided by their local mean over a centred
/// window of 50, then binned with the Freedman-Diaconis width.
SpacingEntropy spacing_entropy(const ZeroTable& table, double t_max);

/// Plug-in histogram entropy of samples with Freedman-Diaconis bins.
SpacingEntropy histogram_entropy(std::vector<double> samples);

struct SemicircleEntropy {
  double closed_form = 0.0;  // ln(2 pi) - 1/2
  double quadrature = 0.0;   // -int p ln p over [-2, 2]
};

SemicircleEntropy semicircle_entropy();

}  // namespace pzlab
