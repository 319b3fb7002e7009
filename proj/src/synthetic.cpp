#include "pzlab/synthetic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "pzlab/error.hpp"
#include "pzlab/regularity.hpp"
#include "pzlab/resample.hpp"

namespace pzlab {

PointSet cantor_points(int depth) {
  if (depth < 1 || depth > 16) fail(Errc::parameter, "Cantor depth must be in [1, 16]");
  std::uint64_t pow3 = 1;
  for (int i = 0; i < depth; ++i) pow3 *= 3;
  const std::uint64_t count = std::uint64_t{1} << depth;
  std::vector<double> pts(count);
  const double denom = 2.0 * static_cast<double>(pow3);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    // Left end of the interval, in units of 3^-depth: ternary digits 0 or 2.
    std::uint64_t left = 0;
    for (int j = depth - 1; j >= 0; --j) left = 3 * left + 2 * ((mask >> j) & 1);
    pts[mask] = static_cast<double>(2 * left + 1) / denom;
  }
  return PointSet(std::move(pts), 0.0, 1.0);
}

SampledField weierstrass_field(double H, int n_terms, std::size_t length) {
  if (!(H > 0.0 && H < 1.0)) fail(Errc::parameter, "H must lie in (0, 1)");
  if (n_terms < 20) fail(Errc::parameter, "n_terms must be at least 20");
  if (length < 1024) fail(Errc::parameter, "length must be at least 1024");
  // x_i = 2i/(n-1), so 2^k pi x_i = pi m / (n-1) with m = 2^(k+1) i mod 2(n-1).
  const std::uint64_t half = length - 1;
  const std::uint64_t period = 2 * half;
  std::vector<double> values(length, 0.0);
  std::uint64_t mult = 2 % period;
  for (int k = 0; k < n_terms; ++k) {
    const double amp = std::pow(2.0, -static_cast<double>(k) * H);
    for (std::size_t i = 0; i < length; ++i) {
      std::uint64_t m = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(mult) * i) % period);
      if (m > half) m = period - m;
      values[i] += amp * std::cos(std::numbers::pi * static_cast<double>(m) /
                                  static_cast<double>(half));
    }
    mult = (2 * mult) % period;
  }
  return SampledField(std::move(values), 0.0, 2.0 / static_cast<double>(half), Boundary::clamped);
}

namespace {
std::mutex plan_mutex;
}

SampledField fractional_noise(double H, std::size_t length, std::uint64_t seed) {
  if (!(H > 0.0 && H < 1.0)) fail(Errc::parameter, "H must lie in (0, 1)");
  if (length < 256 || floor_pow2(length) != length)
    fail(Errc::parameter, "length must be a power of two >= 256");
  const std::size_t half = length / 2;
  std::vector<fftw_complex> spec(half + 1);
  spec[0][0] = spec[0][1] = 0.0;
  StreamRng rng(seed, 0, 0);
  const double exponent = -(2.0 * H + 1.0) / 2.0;
  for (std::size_t k = 1; k <= half; ++k) {
    const double amp = std::pow(static_cast<double>(k), exponent);
    const double re = rng.normal();
    const double im = rng.normal();
    spec[k][0] = amp * re;
    spec[k][1] = k == half ? 0.0 : amp * im;
  }
  std::vector<double> out(length);
  fftw_plan plan;
  {
    std::lock_guard lock(plan_mutex);
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(length), spec.data(), out.data(), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
  double ss = 0.0;
  for (double v : out) ss += v * v;
  const double sd = std::sqrt(ss / static_cast<double>(length));
  for (double& v : out) v /= sd;
  return SampledField(std::move(out), 0.0, 1.0 / static_cast<double>(length), Boundary::periodic);
}

PowerSweep power_sweep(double c_inf, double a, double b, std::span<const double> scales,
                       double noise_sd, std::uint64_t seed) {
  if (!(b > 0.0)) fail(Errc::parameter, "b must be positive");
  if (!(noise_sd >= 0.0)) fail(Errc::parameter, "noise_sd must be nonnegative");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0)) fail(Errc::parameter, "scales must be positive");
    if (i > 0 && !(scales[i - 1] < scales[i])) fail(Errc::parameter, "scales must be ascending");
  }
  PowerSweep out;
  StreamRng rng(seed, 0, 0);
  for (double L : scales) {
    out.Ls.push_back(L);
    double c = c_inf + a * std::pow(L, -b);
    if (noise_sd > 0.0) c += noise_sd * rng.normal();
    out.Cs.push_back(c);
  }
  return out;
}

SampledField white_noise_field(std::size_t length, std::uint64_t seed) {
  StreamRng rng(seed, 0, 0);
  std::vector<double> v(length);
  for (double& x : v) x = rng.normal();
  return SampledField(std::move(v), 0.0, 1.0, Boundary::periodic);
}

}  // namespace pzlab
