#pragma once

// Zeta-zero tables and the fields built from them.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pzlab/field.hpp"

namespace pzlab {

/// Ascending imaginary parts of nontrivial zeta zeros with their source.
class ZeroTable {
 public:
  ZeroTable(std::vector<double> gammas, std::string source_path);

  std::span<const double> gammas() const noexcept { return gammas_; }
  const std::string& source_path() const noexcept { return source_; }
  std::size_t count() const noexcept { return gammas_.size(); }

  /// First ordinate agrees with 14.134725 to 1e-4.
  bool starts_at_first_zero() const noexcept;

 private:
  std::vector<double> gammas_;
  std::string source_;
};

/// Closed window [lo, hi] on the ordinate axis.
struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

/// Reads an Odlyzko-style table: one decimal per non-blank line.
ZeroTable parse_zero_file(const std::filesystem::path& path);

/// Same format, from memory; `origin` is used in error messages.
ZeroTable parse_zero_text(std::string_view text, std::string origin = "<memory>");

std::size_t zero_count(const ZeroTable& table, double t);

/// Sum of unit Gaussians centred on the zeros in (window.lo, window.hi],
/// truncated at 5 sigma. Periodic fields sample [lo, hi) and add the images
/// gamma +/- (hi - lo) that reach the window.
SampledField zero_potential(const ZeroTable& table, Window window, double sigma, double step,
                            Boundary boundary);

inline SampledField zero_potential(const ZeroTable& table, double L, double sigma, double step,
                                   Boundary boundary) {
  return zero_potential(table, Window{0.0, L}, sigma, step, boundary);
}

/// Default grid: L / 4096.
inline double default_potential_step(double L) { return L / 4096.0; }

/// psi(t) = (N(t) - t/(2 pi) ln(t/(2 pi e))) / (sqrt(t) ln t) at t = k*step in (2 pi e, T].
SampledField zero_fluctuation_field(const ZeroTable& table, double T, double step);

/// Smooth (Riemann-von Mangoldt main term) zero count t/(2 pi) ln(t/(2 pi e)).
double smooth_zero_count(double t);

}  // namespace pzlab
