#pragma once

// CSV and JSON serialisation shared by the CLI and tests. Numbers are
// written with 12 significant digits so reruns are byte-identical.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pzlab/arith.hpp"
#include "pzlab/duality.hpp"
#include "pzlab/field.hpp"
#include "pzlab/modular.hpp"
#include "pzlab/regularity.hpp"
#include "pzlab/rgflow.hpp"
#include "pzlab/scaling.hpp"

namespace pzlab {

std::string format_number(double x);

/// JSON number parsed from format_number so reruns serialise identically;
/// non-finite values become null.
nlohmann::ordered_json json_number(double x);

std::string point_set_csv(const PointSet& points);
std::string field_csv(const SampledField& field);
std::string profile_csv(const VariationProfile& profile);
std::string sweep_csv(std::span<const SweepRecord> records);
std::string k_trajectory_csv(const KTrajectory& traj);
std::string flow_trajectory_csv(const FlowTrajectory& traj);
std::string survey_csv(const SurveyReport& report);

/// Parses the sweep CSV back into (L, K) pairs plus the interval columns.
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);

struct FitReportEntry {
  ScalingFit fit;
  double delta_aic = 0.0;
  double cv_mse = 0.0;
  bool cv_ok = true;
};

nlohmann::ordered_json fit_report_json(std::span<const FitReportEntry> entries);
nlohmann::ordered_json stability_json(const ModifiedFlowSpec& spec, const StabilityReport& report);

/// Writes via a temporary file and rename so readers never see a partial file.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace pzlab
