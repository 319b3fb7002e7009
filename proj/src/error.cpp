#include "pzlab/error.hpp"

namespace pzlab {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::empty_input: return "empty input";
    case Errc::domain: return "domain error";
    case Errc::parameter: return "parameter error";
    case Errc::parse: return "parse error";
    case Errc::integrity: return "integrity error";
    case Errc::empty_support: return "empty support";
    case Errc::lag: return "lag error";
    case Errc::window: return "window error";
    case Errc::fit: return "fit error";
    case Errc::degenerate_profile: return "degenerate profile";
    case Errc::scale: return "scale error";
    case Errc::sample: return "sample error";
    case Errc::comparison: return "comparison error";
    case Errc::cross_validation: return "cross-validation error";
    case Errc::resample: return "resample error";
    case Errc::integration: return "integration error";
    case Errc::io: return "io error";
  }
  return "error";
}

}  // namespace pzlab
