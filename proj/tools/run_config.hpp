#pragma once

// Run configuration shared by the CLI commands: JSON document first, then
// command-line overrides.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "json.hpp"
#include "pzlab/duality.hpp"

namespace pzlab {

struct RunConfig {
  std::vector<double> scales = reference_scales();
  ResidueSpec residues = ResidueSpec::mod16_quarter();
  double sigma = 0.8;
  std::size_t bootstrap_n = 1000;
  std::uint64_t seed = 20260101;
  std::filesystem::path zeros_path;
  std::filesystem::path output_dir = "out";

  /// Throws Errc::parameter unless scales ascend and bootstrap_n >= 100.
  void validate() const;
  SweepConfig sweep_config() const;
  nlohmann::ordered_json to_json() const;
};

/// Flag values that override the JSON document when present.
struct ConfigOverrides {
  std::optional<std::filesystem::path> config;
  std::optional<std::filesystem::path> zeros;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> bootstrap;
  std::optional<double> sigma;
  std::optional<std::int64_t> modulus;
  std::vector<std::int64_t> residues;
  std::vector<double> scales;
};

/// Defaults, then the JSON file (unknown keys are a parse error), then flags.
RunConfig load_run_config(const ConfigOverrides& overrides,
                          const std::filesystem::path& default_zeros);

}  // namespace pzlab
