#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "pzlab/resample.hpp"

using namespace pzlab;

namespace {

double mean_stat(std::span<const double> xs) { return mean(xs); }

double sample_sd(std::span<const double> xs) {
  const double m = mean(xs);
  double ss = 0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

TEST_SUITE("resample") {
  TEST_CASE("stream generator") {
    StreamRng a(7, 1, 2), b(7, 1, 2), c(7, 1, 3), d(7, 2, 2);
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
    StreamRng u(1, 0, 0);
    double lo = 1, hi = 0, sum = 0;
    for (int i = 0; i < 20000; ++i) {
      const double v = u.uniform();
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      sum += v;
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    CHECK(sum / 20000 == doctest::Approx(0.5).epsilon(0.02));
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) ++counts[u.below(7)];
    for (int c7 : counts) CHECK(std::abs(c7 - 10000) < 500);
    double s1 = 0, s2 = 0;
    for (int i = 0; i < 40000; ++i) {
      const double z = u.normal();
      s1 += z;
      s2 += z * z;
    }
    CHECK(std::abs(s1 / 40000) < 0.03);
    CHECK(s2 / 40000 == doctest::Approx(1.0).epsilon(0.03));
    CHECK(splitmix64(0) != splitmix64(1));
  }

  TEST_CASE("bootstrap of constant data") {
    const std::vector<double> data{5, 5, 5, 5};
    const auto r = bootstrap(data, mean_stat, 200, 1);
    CHECK(r.median == 5.0);
    CHECK(r.ci_hi - r.ci_lo == 0.0);
    CHECK(r.n_resamples == 200);
    CHECK(r.seed == 1);
  }

  TEST_CASE("bootstrap of 1..100 against the analytic standard error") {
    std::vector<double> data(100);
    std::iota(data.begin(), data.end(), 1.0);
    const auto r = bootstrap(data, mean_stat, 1000, 42);
    CHECK(std::abs(r.median - 50.5) < 0.5);
    // 2 * 1.96 * sd / sqrt(n), with the population sd of the resampling law.
    double ss = 0;
    for (double x : data) ss += (x - 50.5) * (x - 50.5);
    const double width = 2 * 1.96 * std::sqrt(ss / 100.0) / 10.0;
    CHECK(width == doctest::Approx(11.3).epsilon(0.01));
    CHECK(std::abs((r.ci_hi - r.ci_lo) - width) <= 0.2 * width);
    CHECK(r.ci_lo <= r.median);
    CHECK(r.median <= r.ci_hi);
  }

  TEST_CASE("bootstrap determinism and permutation invariance") {
    std::vector<double> data{3.1, -2.0, 7.5, 0.25, 9.0, 4.4, -1.5, 2.2};
    const auto a = bootstrap(data, mean_stat, 500, 99);
    const auto b = bootstrap(data, mean_stat, 500, 99);
    CHECK(a.median == b.median);
    CHECK(a.ci_lo == b.ci_lo);
    CHECK(a.ci_hi == b.ci_hi);
    std::reverse(data.begin(), data.end());
    const auto c = bootstrap(data, mean_stat, 500, 99);
    CHECK(a.median == c.median);
    CHECK(a.ci_lo == c.ci_lo);
    CHECK(a.ci_hi == c.ci_hi);
    const auto d = bootstrap(data, mean_stat, 500, 100);
    CHECK((d.ci_lo != a.ci_lo || d.ci_hi != a.ci_hi));
  }

  TEST_CASE("bootstrap is independent of the thread count") {
    std::vector<double> data(40);
    StreamRng g(5, 0, 0);
    for (double& x : data) x = g.normal();
    ::setenv("PZLAB_THREADS", "1", 1);
    const auto one = bootstrap(data, mean_stat, 300, 8);
    ::setenv("PZLAB_THREADS", "4", 1);
    const auto four = bootstrap(data, mean_stat, 300, 8);
    ::unsetenv("PZLAB_THREADS");
    CHECK(one.median == four.median);
    CHECK(one.ci_lo == four.ci_lo);
    CHECK(one.ci_hi == four.ci_hi);
  }

  TEST_CASE("bootstrap error handling") {
    const std::vector<double> data{1, 2, 3};
    CHECK_THROWS(bootstrap(std::vector<double>{1}, mean_stat, 200, 1));
    CHECK_THROWS(bootstrap(data, mean_stat, 50, 1));
    const Statistic bad = [](std::span<const double>) -> double {
      throw std::runtime_error("boom");
    };
    try {
      bootstrap(data, bad, 200, 1);
      FAIL("expected an exception");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find("resample 0") != std::string::npos);
    }
  }

  TEST_CASE("confidence interval coverage") {
    int covered = 0;
    for (int trial = 0; trial < 200; ++trial) {
      StreamRng g(2024, static_cast<std::uint64_t>(trial), 0);
      std::vector<double> data(30);
      for (double& x : data) x = 3.0 + g.normal();
      const auto r = bootstrap(data, mean_stat, 200, 77, static_cast<std::uint64_t>(trial));
      covered += r.ci_lo <= 3.0 && 3.0 <= r.ci_hi;
    }
    CHECK(covered >= 176);
  }

  TEST_CASE("jackknife") {
    const std::vector<double> constant{2, 2, 2, 2, 2};
    CHECK(jackknife(constant, mean_stat).std_error == 0.0);

    const std::vector<double> data{1.5, 4.0, -2.0, 8.25, 3.0, 0.5, 6.0};
    const auto j = jackknife(data, mean_stat);
    CHECK(j.estimate == doctest::Approx(mean(data)));
    const double se = sample_sd(data) / std::sqrt(static_cast<double>(data.size()));
    CHECK(j.std_error == doctest::Approx(se).epsilon(1e-12));

    const std::vector<double> skewed{1, 2, 3, 4, 100};
    const Statistic med = [](std::span<const double> xs) {
      return median(std::vector<double>(xs.begin(), xs.end()));
    };
    // Leave-one-out medians: 3, 3, 3, 2.5, 2.5 (dropping 1,2,3 -> mid of remaining pair).
    std::vector<double> loo;
    for (std::size_t i = 0; i < skewed.size(); ++i) {
      std::vector<double> rest;
      for (std::size_t k = 0; k < skewed.size(); ++k)
        if (k != i) rest.push_back(skewed[k]);
      loo.push_back(median(rest));
    }
    const double bar = mean(loo);
    double ss = 0;
    for (double t : loo) ss += (t - bar) * (t - bar);
    const double want = std::sqrt(4.0 / 5.0 * ss);
    const auto jm = jackknife(skewed, med);
    CHECK(jm.std_error > 0.0);
    CHECK(std::isfinite(jm.std_error));
    CHECK(jm.std_error == doctest::Approx(want).epsilon(1e-12));
    CHECK_THROWS(jackknife(std::vector<double>{1, 2}, mean_stat));
  }

  TEST_CASE("percentiles and medians") {
    CHECK(percentile({1, 2, 3, 4, 5}, 50) == 3.0);
    CHECK(percentile({1, 2, 3, 4}, 50) == 2.5);
    CHECK(percentile({10, 0}, 0) == 0.0);
    CHECK(percentile({10, 0}, 100) == 10.0);
    CHECK(percentile({0, 10}, 25) == 2.5);
    CHECK(median({4, 1, 3}) == 3.0);
    CHECK(median({4, 1, 3, 2}) == 2.5);
  }

  TEST_CASE("parallel_for") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    ::setenv("PZLAB_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    try {
      parallel_for(50, [](std::size_t i) {
        if (i == 7 || i == 31) throw std::runtime_error("fail " + std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "fail 7");
    }
    ::unsetenv("PZLAB_THREADS");
    CHECK(worker_count() >= 1);
  }
}
