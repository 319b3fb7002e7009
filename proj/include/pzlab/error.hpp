#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pzlab {

/// Classifies every failure raised by the library so callers (and the CLI's
/// exit-code mapping) can branch on the kind instead of parsing messages.
enum class Errc {
  empty_input,
  domain,
  parameter,
  parse,
  integrity,
  empty_support,
  lag,
  window,
  fit,
  degenerate_profile,
  scale,
  sample,
  comparison,
  cross_validation,
  resample,
  integration,
  io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// True for failures caused by bad user input rather than numerics.
  bool is_input_error() const noexcept {
    return code_ == Errc::parse || code_ == Errc::integrity || code_ == Errc::io ||
           code_ == Errc::empty_input;
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pzlab
