#pragma once

// Bootstrap and jackknife error estimation.
//
// Random streams: every resample is driven by its own std::mt19937_64 whose
// seed is a SplitMix64 hash of (seed, trial, index). Draws never depend on
// thread scheduling, so results are bit-identical for any PZLAB_THREADS.
// Bounded integers use Lemire's multiply-shift rejection method and normals
// use Box-Muller; both are written out here because the std distributions
// are not specified bit-exactly across standard libraries.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace pzlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

using Statistic = std::function<double(std::span<const double>)>;

struct ResampleResult {
  double median = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::size_t n_resamples = 0;
  std::uint64_t seed = 0;
};

struct JackknifeResult {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Percentile bootstrap (2.5 / 50 / 97.5). Data are sorted before
/// resampling so the result depends only on the multiset.
ResampleResult bootstrap(std::span<const double> data, const Statistic& statistic,
                         std::size_t n_resamples, std::uint64_t seed, std::uint64_t trial = 0);

JackknifeResult jackknife(std::span<const double> data, const Statistic& statistic);

/// Linear-interpolation percentile (q in [0, 100]) of unsorted data.
double percentile(std::vector<double> values, double q);

double mean(std::span<const double> xs);
double median(std::vector<double> xs);

/// Worker count: PZLAB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads.
/// The first exception thrown (lowest index) is rethrown after joining.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pzlab
