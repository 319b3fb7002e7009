#include "pzlab/duality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "pzlab/error.hpp"
#include "pzlab/resample.hpp"

namespace pzlab {

std::vector<double> reference_scales() {
  return {100,  115,  125,  140,  150,  165,  175,  190,  200,  225,  250,  275,  300,  325,
          350,  375,  400,  450,  475,  500,  550,  600,  650,  700,  750,  800,  850,  900,
          950,  1000, 1100, 1200, 1300, 1400, 1500, 1600, 1700, 1800, 1900, 2000};
}

double duality_K(double d_P, double zeta_R) {
  if (!(d_P > 0.0) || !(zeta_R > 0.0) || !std::isfinite(d_P) || !std::isfinite(zeta_R))
    fail(Errc::domain, "d_P and zeta_R must be positive");
  return 1.0 / d_P + 1.0 / zeta_R;
}

SweepRecord make_record(double L, const DimensionEstimate& d_P, const RegularityEstimate& zeta_R) {
  SweepRecord r;
  r.L = L;
  r.d_P = d_P;
  r.zeta_R = zeta_R;
  r.K = duality_K(d_P.value, zeta_R.zeta_R);
  r.C_beta2 = 2.0 * r.K;
  r.C_beta4 = 4.0 * r.K;
  return r;
}

namespace {

struct Interval {
  double median;
  double lo;
  double hi;
};

Interval summarize(std::vector<double> values) {
  return {percentile(values, 50.0), percentile(values, 2.5), percentile(values, 97.5)};
}

}  // namespace

SweepResult scale_sweep(const SweepConfig& config, const ZeroTable& zeros) {
  if (config.scales.empty()) fail(Errc::parameter, "no scales requested");
  for (std::size_t i = 0; i < config.scales.size(); ++i) {
    if (!(config.scales[i] > 0.0)) fail(Errc::parameter, "scales must be positive");
    if (i > 0 && !(config.scales[i - 1] < config.scales[i]))
      fail(Errc::parameter, "scales must be ascending");
  }
  if (config.bootstrap_n < 100) fail(Errc::parameter, "bootstrap_n must be at least 100");
  if (!(config.sigma > 0.0)) fail(Errc::parameter, "sigma must be positive");
  config.residues.validate();

  const auto top = static_cast<std::uint64_t>(std::floor(config.scales.back()));
  const PointSet primes = top >= 2 ? sieve_primes(top) : PointSet({}, 0.0, 1.0);
  const std::size_t m = config.scales.size();
  std::vector<std::optional<SweepRecord>> records(m);
  std::vector<std::string> reasons(m);

  parallel_for(m, [&](std::size_t i) {
    const double L = config.scales[i];
    const PointSet subset = select_residues(primes.truncated(L), config.residues);
    if (subset.size() < config.min_points) {
      reasons[i] = std::to_string(subset.size()) + " subset primes (need " +
                   std::to_string(config.min_points) + ")";
      return;
    }
    const std::size_t nz = zero_count(zeros, L);
    if (nz < config.min_zeros) {
      reasons[i] = std::to_string(nz) + " zeros (need " + std::to_string(config.min_zeros) + ")";
      return;
    }
    try {
      DimensionEstimate d = box_dimension(subset, config.box);
      if (!d.flat) {
        auto slopes = bootstrap_slopes(d.diagnostics, config.bootstrap_n, config.seed, 2 * i);
        for (double& s : slopes) s = -s;
        const Interval iv = summarize(std::move(slopes));
        d.value = std::clamp(iv.median, 0.0, 2.0);
        d.ci_lo = std::min(iv.lo, d.value);
        d.ci_hi = std::max(iv.hi, d.value);
      }

      const SampledField V = zero_potential(zeros, L, config.sigma, default_potential_step(L),
                                            Boundary::periodic);
      const RegularityEstimate point = holder_estimate(variation_profile(V, config.variation));
      auto hs = bootstrap_slopes(point.diagnostics, config.bootstrap_n, config.seed, 2 * i + 1);
      const Interval ih = summarize(std::move(hs));
      RegularityEstimate z = RegularityEstimate::from_H(ih.median, ih.lo, ih.hi,
                                                        DimensionMethod::variation,
                                                        point.diagnostics);
      records[i] = make_record(L, d, z);
    } catch (const Error& e) {
      reasons[i] = e.what();
    }
  });

  SweepResult out;
  for (std::size_t i = 0; i < m; ++i) {
    if (records[i])
      out.records.push_back(*records[i]);
    else
      out.skipped.push_back({config.scales[i], reasons[i]});
  }
  return out;
}

InfoDensities normalize(double I_P, double I_Z) {
  if (!(I_P > 0.0) || !(I_Z > 0.0) || !std::isfinite(I_P) || !std::isfinite(I_Z))
    fail(Errc::domain, "information densities must be positive");
  InfoDensities out;
  out.I_P = I_P;
  out.I_Z = I_Z;
  const double root = std::sqrt(I_P * I_Z);
  out.gamma_norm = 2.0 / root;
  // AM-GM form: 2(I_P + I_Z)/sqrt(I_P I_Z) = 4 + 2(sqrt I_P - sqrt I_Z)^2 / sqrt(I_P I_Z).
  const double diff = std::sqrt(I_P) - std::sqrt(I_Z);
  out.K_norm = 4.0 + 2.0 * diff * diff / root;
  return out;
}

double dP_from_K(double K) {
  if (!(K > kAbsZetaHalf)) fail(Errc::domain, "K must exceed |zeta(1/2)|");
  return 1.0 / (K - kAbsZetaHalf);
}

ComplexityBits complexity_estimate(std::uint64_t N) {
  if (N < 10) fail(Errc::parameter, "complexity estimate needs N >= 10");
  ComplexityBits out;
  out.prime_count = primes_up_to(N).size();
  const auto n = static_cast<double>(N);
  const auto k = static_cast<double>(out.prime_count);
  out.exact_bits =
      (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::numbers::ln2;
  out.asymptotic_bits = n * std::log2(std::log(n)) / std::log(n);
  return out;
}

LzComplexity lz_complexity(const BitSequence& bits) {
  const std::size_t n = bits.size();
  if (n < 4) fail(Errc::parameter, "LZ complexity needs at least 4 symbols");
  // Binary trie of phrases; node 0 is the empty phrase.
  std::vector<std::array<std::uint32_t, 2>> trie(1, {0, 0});
  std::size_t phrases = 0;
  std::uint32_t node = 0;
  for (std::uint8_t b : bits.bits) {
    const std::uint32_t next = trie[node][b & 1];
    if (next != 0) {
      node = next;
      continue;
    }
    trie[node][b & 1] = static_cast<std::uint32_t>(trie.size());
    trie.push_back({0, 0});
    ++phrases;
    node = 0;
  }
  if (node != 0) ++phrases;
  LzComplexity out;
  out.phrases = phrases;
  const auto c = static_cast<double>(phrases);
  out.rate_bits_per_symbol = c * (std::log2(c) + 1.0) / static_cast<double>(n);
  return out;
}

SpacingEntropy histogram_entropy(std::vector<double> samples) {
  SpacingEntropy out;
  out.n_spacings = samples.size();
  if (samples.size() < 2) fail(Errc::sample, "entropy needs at least 2 samples");
  std::sort(samples.begin(), samples.end());
  const double iqr = percentile(samples, 75.0) - percentile(samples, 25.0);
  const double width = 2.0 * iqr / std::cbrt(static_cast<double>(samples.size()));
  const double lo = samples.front(), hi = samples.back();
  const double typical = std::max(1.0, std::abs(samples[samples.size() / 2]));
  if (!(iqr > 1e-12 * typical) || !(hi > lo)) {
    out.entropy = kEntropySentinel;
    out.degenerate = true;
    return out;
  }
  out.bin_width = width;
  const auto bins = static_cast<std::size_t>(std::floor((hi - lo) / width)) + 1;
  std::vector<std::size_t> counts(bins, 0);
  for (double s : samples)
    ++counts[std::min(bins - 1, static_cast<std::size_t>(std::floor((s - lo) / width)))];
  const auto n = static_cast<double>(samples.size());
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log(p / width);
  }
  out.entropy = h;
  return out;
}

SpacingEntropy spacing_entropy(const ZeroTable& table, double t_max) {
  const std::size_t nz = zero_count(table, t_max);
  if (nz < 100) fail(Errc::sample, "need at least 100 zeros below t_max");
  const auto g = table.gammas();
  const std::size_t ns = nz - 1;
  std::vector<double> gaps(ns);
  for (std::size_t i = 0; i < ns; ++i) gaps[i] = g[i + 1] - g[i];
  std::vector<double> prefix(ns + 1, 0.0);
  for (std::size_t i = 0; i < ns; ++i) prefix[i + 1] = prefix[i] + gaps[i];

  const std::size_t w = std::min(kUnfoldWindow, ns);
  std::vector<double> unfolded(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    std::size_t lo = i >= w / 2 ? i - w / 2 : 0;
    lo = std::min(lo, ns - w);
    const double local = (prefix[lo + w] - prefix[lo]) / static_cast<double>(w);
    unfolded[i] = gaps[i] / local;
  }
  return histogram_entropy(std::move(unfolded));
}

SemicircleEntropy semicircle_entropy() {
  SemicircleEntropy out;
  out.closed_form = std::log(2.0 * std::numbers::pi) - 0.5;
  auto integrand = [](double x) {
    const double p = std::sqrt(std::max(0.0, 4.0 - x * x)) / (2.0 * std::numbers::pi);
    return p > 0.0 ? -p * std::log(p) : 0.0;
  };
  boost::math::quadrature::tanh_sinh<double> q;
  out.quadrature = q.integrate(integrand, -2.0, 2.0, 1e-12);
  return out;
}

}  // namespace pzlab
