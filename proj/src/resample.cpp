#include "pzlab/resample.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>

#include "pzlab/error.hpp"

namespace pzlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t index) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ splitmix64(trial + 0x632BE59BD9B4E019ULL));
  h = splitmix64(h ^ splitmix64(index + 0x85157AF5ULL));
  engine_.seed(h);
}

double StreamRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t StreamRng::below(std::uint64_t bound) {
  if (bound == 0) fail(Errc::parameter, "bound must be positive");
  unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double StreamRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double mean(std::span<const double> xs) {
  if (xs.empty()) fail(Errc::empty_input, "mean of empty data");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) fail(Errc::empty_input, "percentile of empty data");
  if (!(q >= 0.0 && q <= 100.0)) fail(Errc::parameter, "percentile must be in [0, 100]");
  std::sort(values.begin(), values.end());
  const double pos = q / 100.0 * static_cast<double>(values.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  if (i + 1 >= values.size()) return values.back();
  const double frac = pos - static_cast<double>(i);
  return values[i] + frac * (values[i + 1] - values[i]);
}

double median(std::vector<double> xs) { return percentile(std::move(xs), 50.0); }

unsigned worker_count() {
  if (const char* env = std::getenv("PZLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) threads.emplace_back(run);
  run();
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

ResampleResult bootstrap(std::span<const double> data, const Statistic& statistic,
                         std::size_t n_resamples, std::uint64_t seed, std::uint64_t trial) {
  if (data.size() < 2) fail(Errc::empty_input, "bootstrap needs at least 2 data points");
  if (n_resamples < 100) fail(Errc::parameter, "bootstrap needs at least 100 resamples");
  std::vector<double> sorted(data.begin(), data.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> stats(n_resamples);
  parallel_for(n_resamples, [&](std::size_t j) {
    StreamRng rng(seed, trial, j);
    std::vector<double> sample(sorted.size());
    for (auto& s : sample) s = sorted[rng.below(sorted.size())];
    try {
      stats[j] = statistic(sample);
    } catch (const std::exception& e) {
      fail(Errc::resample, "statistic failed on resample " + std::to_string(j) + ": " + e.what());
    }
  });
  ResampleResult out;
  out.median = median(stats);
  out.ci_lo = percentile(stats, 2.5);
  out.ci_hi = percentile(stats, 97.5);
  out.n_resamples = n_resamples;
  out.seed = seed;
  return out;
}

JackknifeResult jackknife(std::span<const double> data, const Statistic& statistic) {
  const std::size_t n = data.size();
  if (n < 3) fail(Errc::empty_input, "jackknife needs at least 3 data points");
  std::vector<double> theta(n);
  std::vector<double> sample(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) sample[k++] = data[j];
    try {
      theta[i] = statistic(sample);
    } catch (const std::exception& e) {
      fail(Errc::resample, "statistic failed leaving out " + std::to_string(i) + ": " + e.what());
    }
  }
  const double bar = mean(theta);
  double ss = 0.0;
  for (double t : theta) ss += (t - bar) * (t - bar);
  JackknifeResult out;
  out.estimate = statistic(data);
  out.std_error = std::sqrt((static_cast<double>(n) - 1.0) / static_cast<double>(n) * ss);
  return out;
}

}  // namespace pzlab
