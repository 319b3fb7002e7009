#include "pzlab/field.hpp"

#include <cmath>
#include <string>

#include "pzlab/error.hpp"

namespace pzlab {

std::string_view to_string(Boundary b) noexcept {
  return b == Boundary::periodic ? "periodic" : "clamped";
}

SampledField::SampledField(std::vector<double> values, double x0, double step, Boundary boundary)
    : values_(std::move(values)), x0_(x0), step_(step), boundary_(boundary) {
  if (!(step_ > 0.0) || !std::isfinite(step_)) fail(Errc::parameter, "field step must be positive");
  if (values_.size() < kMinSamples)
    fail(Errc::parameter, "field needs at least " + std::to_string(kMinSamples) + " samples, got " +
                              std::to_string(values_.size()));
}

double SampledField::extent() const noexcept {
  const auto n = static_cast<double>(values_.size());
  return boundary_ == Boundary::periodic ? n * step_ : (n - 1.0) * step_;
}

}  // namespace pzlab
