#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace pzlab {

enum class Boundary { periodic, clamped };

std::string_view to_string(Boundary b) noexcept;

/// Uniformly sampled real function: value i sits at x0 + i * step.
///
/// Under the periodic boundary the samples cover one period [x0, x0 + n*step)
/// and index n wraps to 0; under the clamped boundary they cover the closed
/// interval [x0, x0 + (n-1)*step].
class SampledField {
 public:
  static constexpr std::size_t kMinSamples = 8;

  SampledField(std::vector<double> values, double x0, double step, Boundary boundary);

  std::span<const double> values() const noexcept { return values_; }
  double x0() const noexcept { return x0_; }
  double step() const noexcept { return step_; }
  Boundary boundary() const noexcept { return boundary_; }
  std::size_t size() const noexcept { return values_.size(); }
  double x_at(std::size_t i) const noexcept { return x0_ + static_cast<double>(i) * step_; }

  /// Length of the sampled domain (period for periodic fields).
  double extent() const noexcept;

 private:
  std::vector<double> values_;
  double x0_;
  double step_;
  Boundary boundary_;
};

}  // namespace pzlab
