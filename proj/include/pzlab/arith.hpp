#pragma once

// Prime generation, residue-class subsets and the arithmetic observables
// built on them (indicator bits, block densities, the prime fluctuation field).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pzlab/field.hpp"

namespace pzlab {

/// Sorted finite set of real positions inside a declared ambient interval.
class PointSet {
 public:
  PointSet(std::vector<double> positions, double ambient_lo, double ambient_hi);

  std::span<const double> positions() const noexcept { return positions_; }
  double ambient_lo() const noexcept { return lo_; }
  double ambient_hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }

  /// Points in (lo, hi] restricted to a new ambient interval [0, hi].
  PointSet truncated(double hi) const;

 private:
  std::vector<double> positions_;
  double lo_;
  double hi_;
};

struct ResidueSpec {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues{0};

  /// Throws Errc::parameter unless residues are nonempty and in [0, modulus).
  void validate() const;

  /// The mod-16 classes {1, 5, 9, 13} used throughout the sweep.
  static ResidueSpec mod16_quarter();
};

struct BitSequence {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  std::size_t popcount() const noexcept;
  std::string to_string() const;
  static BitSequence from_string(std::string_view text);
};

struct BlockDensity {
  double center;
  std::size_t count;
  double rho;
};

/// All primes <= limit as an ascending PointSet on [0, limit].
/// Uses a segmented odd-only sieve for limits above 1e7.
PointSet sieve_primes(std::uint64_t limit);

/// Raw prime list (same algorithm as sieve_primes).
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

PointSet select_residues(const PointSet& points, const ResidueSpec& spec);

BitSequence indicator_sequence(const PointSet& points, std::size_t length);

/// Half-open blocks (x_I, x_I + B], x_I = (I-1)B, I = 1..floor(L/B).
std::vector<BlockDensity> block_density(const PointSet& points, double L, double B);

/// li(x) = li(2) + integral_2^x dt / ln t.
double log_integral(double x);

/// li(2) to double precision.
inline constexpr double kLi2 = 1.045163780117492784844588889194613136522615578151;

/// phi(x) = (pi(x) - li(x)) / (sqrt(x) / ln x) sampled on [2, limit].
SampledField prime_fluctuation_field(std::uint64_t limit, double grid_step);

}  // namespace pzlab
