#pragma once

// Generators with known ground truth for estimator validation.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pzlab/arith.hpp"
#include "pzlab/field.hpp"

namespace pzlab {

/// Midpoints of the 2^depth intervals surviving `depth` middle-third
/// removals from [0, 1]; 1 <= depth <= 16.
PointSet cantor_points(int depth);

/// W(x) = sum_{k<n_terms} 2^{-kH} cos(2^k pi x) at `length` evenly spaced
/// points of [0, 2] (clamped field). Phases are reduced exactly in integer
/// arithmetic, so high-order terms carry no argument-reduction error.
SampledField weierstrass_field(double H, int n_terms, std::size_t length);

/// Spectral synthesis with PSD ~ |f|^-(2H+1): Gaussian Fourier amplitudes
/// from stream (seed, 0, 0), zero mean, periodic field on [0, 1).
SampledField fractional_noise(double H, std::size_t length, std::uint64_t seed);

struct PowerSweep {
  std::vector<double> Ls;
  std::vector<double> Cs;
};

/// C_i = c_inf + a L_i^-b + noise_sd * N(0, 1) with normals drawn in order
/// from stream (seed, 0, 0).
PowerSweep power_sweep(double c_inf, double a, double b, std::span<const double> scales,
                       double noise_sd, std::uint64_t seed);

/// Gaussian white noise field of given length (periodic, unit step).
SampledField white_noise_field(std::size_t length, std::uint64_t seed);

}  // namespace pzlab
