#include "pzlab/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "pzlab/error.hpp"

namespace pzlab {

namespace {
constexpr double kFirstZero = 14.134725;
constexpr double kTruncationSigmas = 5.0;
const double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;
}  // namespace

ZeroTable::ZeroTable(std::vector<double> gammas, std::string source_path)
    : gammas_(std::move(gammas)), source_(std::move(source_path)) {
  for (std::size_t i = 0; i < gammas_.size(); ++i) {
    if (!(gammas_[i] > 0.0) || !std::isfinite(gammas_[i]))
      fail(Errc::integrity, "zero ordinate " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && !(gammas_[i - 1] < gammas_[i]))
      fail(Errc::integrity, "zero ordinates not ascending at entry " + std::to_string(i + 1));
  }
}

bool ZeroTable::starts_at_first_zero() const noexcept {
  return !gammas_.empty() && std::abs(gammas_.front() - kFirstZero) <= 1e-4;
}

ZeroTable parse_zero_text(std::string_view text, std::string origin) {
  std::vector<double> gammas;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size())
      fail(Errc::parse, origin + ":" + std::to_string(line_no) + ": not a decimal number");
    if (!gammas.empty() && !(gammas.back() < value))
      fail(Errc::integrity, origin + ":" + std::to_string(line_no) + ": ordinates not ascending");
    gammas.push_back(value);
    if (end == text.size()) break;
  }
  if (gammas.empty()) fail(Errc::parse, origin + ": no zero ordinates found");
  return ZeroTable(std::move(gammas), std::move(origin));
}

ZeroTable parse_zero_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open zeros file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_zero_text(buf.str(), path.string());
}

std::size_t zero_count(const ZeroTable& table, double t) {
  const auto g = table.gammas();
  return static_cast<std::size_t>(std::upper_bound(g.begin(), g.end(), t) - g.begin());
}

SampledField zero_potential(const ZeroTable& table, Window window, double sigma, double step,
                            Boundary boundary) {
  if (!(sigma > 0.0)) fail(Errc::parameter, "sigma must be positive");
  if (!(step > 0.0)) fail(Errc::parameter, "step must be positive");
  if (!(window.hi > window.lo)) fail(Errc::parameter, "empty window");
  const double width = window.hi - window.lo;

  std::size_t n = 0;
  if (boundary == Boundary::periodic) {
    n = static_cast<std::size_t>(std::llround(width / step));
    if (n == 0) n = 1;
    step = width / static_cast<double>(n);
  } else {
    n = static_cast<std::size_t>(std::floor(width / step + 1e-9)) + 1;
  }

  const auto g = table.gammas();
  const auto first = std::upper_bound(g.begin(), g.end(), window.lo);
  const auto last = std::upper_bound(g.begin(), g.end(), window.hi);
  if (first == last) fail(Errc::empty_support, "no zeros inside the window");

  std::vector<double> values(n, 0.0);
  const double reach = kTruncationSigmas * sigma;
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const auto last_index = static_cast<double>(n - 1);

  // d is the centre's offset from window.lo; samples sit at i * step.
  auto deposit = [&](double d) {
    const double i_lo = std::max(0.0, std::ceil((d - reach) / step));
    const double i_hi = std::min(last_index, std::floor((d + reach) / step));
    for (double fi = i_lo; fi <= i_hi; fi += 1.0) {
      const double u = fi * step - d;
      values[static_cast<std::size_t>(fi)] += std::exp(-u * u * inv2s2);
    }
  };

  for (auto it = first; it != last; ++it) {
    const double d = *it - window.lo;
    deposit(d);
    if (boundary == Boundary::periodic) {
      if (d + width - reach <= last_index * step) deposit(d + width);
      if (d - width + reach >= 0.0) deposit(d - width);
    }
  }
  return SampledField(std::move(values), window.lo, step, boundary);
}

double smooth_zero_count(double t) {
  return t / (2.0 * std::numbers::pi) * std::log(t / kTwoPiE);
}

SampledField zero_fluctuation_field(const ZeroTable& table, double T, double step) {
  if (!(T > kTwoPiE)) fail(Errc::parameter, "T must exceed 2 pi e");
  if (!(step > 0.0)) fail(Errc::parameter, "step must be positive");
  auto k = static_cast<std::uint64_t>(std::floor(kTwoPiE / step)) + 1;
  if (static_cast<double>(k) * step <= kTwoPiE) ++k;
  const double t0 = static_cast<double>(k) * step;
  std::vector<double> values;
  for (double t = t0; t <= T + 1e-12 * T; t = static_cast<double>(++k) * step) {
    const auto N = static_cast<double>(zero_count(table, t));
    values.push_back((N - smooth_zero_count(t)) / (std::sqrt(t) * std::log(t)));
  }
  return SampledField(std::move(values), t0, step, Boundary::clamped);
}

}  // namespace pzlab
