#include "pzlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pzlab/error.hpp"

namespace pzlab {

PointSet::PointSet(std::vector<double> positions, double ambient_lo, double ambient_hi)
    : positions_(std::move(positions)), lo_(ambient_lo), hi_(ambient_hi) {
  if (!(lo_ <= hi_)) fail(Errc::parameter, "ambient interval is reversed");
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const double x = positions_[i];
    if (!(x >= lo_ && x <= hi_))
      fail(Errc::domain, "position " + std::to_string(x) + " outside ambient interval");
    if (i > 0 && !(positions_[i - 1] < x))
      fail(Errc::integrity, "positions are not strictly ascending at index " + std::to_string(i));
  }
}

PointSet PointSet::truncated(double hi) const {
  auto end = std::upper_bound(positions_.begin(), positions_.end(), hi);
  return PointSet(std::vector<double>(positions_.begin(), end), lo_, hi);
}

void ResidueSpec::validate() const {
  if (modulus < 1) fail(Errc::parameter, "modulus must be positive");
  if (residues.empty()) fail(Errc::parameter, "residue set is empty");
  for (auto r : residues)
    if (r < 0 || r >= modulus)
      fail(Errc::parameter, "residue " + std::to_string(r) + " not in [0, modulus)");
}

ResidueSpec ResidueSpec::mod16_quarter() { return ResidueSpec{16, {1, 5, 9, 13}}; }

std::size_t BitSequence::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::string BitSequence::to_string() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

BitSequence BitSequence::from_string(std::string_view text) {
  BitSequence out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '1') {
      out.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c != '\n' && c != '\r' && c != ' ' && c != '\t') {
      fail(Errc::parse, "bit sequence has non-binary character at offset " + std::to_string(i));
    }
  }
  if (out.bits.empty()) fail(Errc::parse, "bit sequence is empty");
  return out;
}

namespace {

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint8_t> composite(limit + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return out;
}

constexpr std::uint64_t kSegmentThreshold = 10'000'000;
constexpr std::uint64_t kSegment = 1 << 18;

}  // namespace

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  if (limit < 2) return {};
  if (limit > 1'000'000'000ULL) fail(Errc::parameter, "sieve limit above 1e9");
  if (limit <= kSegmentThreshold) return small_primes(limit);

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const auto base = small_primes(root);
  std::vector<std::uint32_t> out;
  out.reserve(static_cast<std::size_t>(1.1 * static_cast<double>(limit) /
                                       std::log(static_cast<double>(limit))));
  std::vector<std::uint8_t> composite(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(lo + kSegment - 1, limit);
    std::fill(composite.begin(), composite.end(), 0);
    for (auto p : base) {
      const std::uint64_t pp = std::uint64_t{p} * p;
      if (pp > hi) break;
      std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
    }
    for (std::uint64_t n = lo; n <= hi; ++n)
      if (!composite[n - lo]) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

PointSet sieve_primes(std::uint64_t limit) {
  if (limit < 2) fail(Errc::empty_input, "sieve limit must be at least 2");
  const auto primes = primes_up_to(limit);
  return PointSet(std::vector<double>(primes.begin(), primes.end()), 0.0,
                  static_cast<double>(limit));
}

PointSet select_residues(const PointSet& points, const ResidueSpec& spec) {
  spec.validate();
  std::vector<double> kept;
  for (double x : points.positions()) {
    if (x != std::floor(x)) fail(Errc::domain, "non-integer position " + std::to_string(x));
    const auto n = static_cast<std::int64_t>(x);
    const std::int64_t r = ((n % spec.modulus) + spec.modulus) % spec.modulus;
    if (std::find(spec.residues.begin(), spec.residues.end(), r) != spec.residues.end())
      kept.push_back(x);
  }
  return PointSet(std::move(kept), points.ambient_lo(), points.ambient_hi());
}

BitSequence indicator_sequence(const PointSet& points, std::size_t length) {
  BitSequence out;
  out.bits.assign(length, 0);
  for (double x : points.positions()) {
    if (x != std::floor(x)) fail(Errc::domain, "non-integer position " + std::to_string(x));
    if (x >= 1.0 && x <= static_cast<double>(length)) out.bits[static_cast<std::size_t>(x) - 1] = 1;
  }
  return out;
}

std::vector<BlockDensity> block_density(const PointSet& points, double L, double B) {
  if (!(B > 0.0)) fail(Errc::parameter, "block length must be positive");
  if (!(B <= L)) fail(Errc::parameter, "block length exceeds L");
  const auto n_blocks = static_cast<std::size_t>(std::floor(L / B));
  const auto xs = points.positions();
  std::vector<BlockDensity> out;
  out.reserve(n_blocks);
  for (std::size_t i = 0; i < n_blocks; ++i) {
    const double x_lo = static_cast<double>(i) * B;
    const double x_hi = x_lo + B;
    const auto first = std::upper_bound(xs.begin(), xs.end(), x_lo);
    const auto last = std::upper_bound(xs.begin(), xs.end(), x_hi);
    const auto count = static_cast<std::size_t>(last - first);
    const double center = x_lo + 0.5 * B;
    out.push_back({center, count, static_cast<double>(count) / (B / std::log(center))});
  }
  return out;
}

namespace {

double li_increment(double a, double b) {
  auto f = [](double t) { return 1.0 / std::log(t); };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-13);
}

}  // namespace

double log_integral(double x) {
  if (!(x > 1.0)) fail(Errc::domain, "log_integral needs x > 1");
  if (x == 2.0) return kLi2;
  return kLi2 + li_increment(2.0, x);
}

SampledField prime_fluctuation_field(std::uint64_t limit, double grid_step) {
  if (limit < 3) fail(Errc::parameter, "prime field needs limit >= 3");
  if (!(grid_step > 0.0)) fail(Errc::parameter, "grid step must be positive");
  const auto primes = primes_up_to(limit);
  const double top = static_cast<double>(limit);
  const auto n = static_cast<std::size_t>(std::floor((top - 2.0) / grid_step + 1e-9)) + 1;
  std::vector<double> values(n);
  std::size_t pi = 0;
  double li = kLi2;
  double prev = 2.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = 2.0 + static_cast<double>(k) * grid_step;
    while (pi < primes.size() && primes[pi] <= x) ++pi;
    if (x > prev) li += li_increment(prev, x);
    prev = x;
    values[k] = (static_cast<double>(pi) - li) / (std::sqrt(x) / std::log(x));
  }
  return SampledField(std::move(values), 2.0, grid_step, Boundary::clamped);
}

}  // namespace pzlab
