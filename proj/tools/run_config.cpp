#include "run_config.hpp"

#include <set>

#include "pzlab/error.hpp"
#include "pzlab/report.hpp"

namespace pzlab {

void RunConfig::validate() const {
  if (scales.empty()) fail(Errc::parameter, "config: scales must not be empty");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0)) fail(Errc::parameter, "config: scales must be positive");
    if (i > 0 && !(scales[i - 1] < scales[i]))
      fail(Errc::parameter, "config: scales must be strictly ascending");
  }
  if (bootstrap_n < 100) fail(Errc::parameter, "config: bootstrap_n must be at least 100");
  if (!(sigma > 0.0)) fail(Errc::parameter, "config: sigma must be positive");
  residues.validate();
}

SweepConfig RunConfig::sweep_config() const {
  SweepConfig c;
  c.scales = scales;
  c.residues = residues;
  c.sigma = sigma;
  c.bootstrap_n = bootstrap_n;
  c.seed = seed;
  return c;
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  auto& s = j["scales"] = nlohmann::ordered_json::array();
  for (double L : scales) s.push_back(json_number(L));
  j["modulus"] = residues.modulus;
  j["residues"] = residues.residues;
  j["sigma"] = json_number(sigma);
  j["bootstrap_n"] = bootstrap_n;
  j["seed"] = seed;
  j["zeros_path"] = zeros_path.string();
  return j;
}

namespace {

template <class T>
T field(const nlohmann::json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(Errc::parse, std::string("config: field '") + key + "' has the wrong type");
  }
}

}  // namespace

RunConfig load_run_config(const ConfigOverrides& o, const std::filesystem::path& default_zeros) {
  RunConfig cfg;
  cfg.zeros_path = default_zeros;
  if (o.config) {
    const std::string text = read_text_file(*o.config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      fail(Errc::parse, "config " + o.config->string() + ": " + e.what());
    }
    if (!j.is_object()) fail(Errc::parse, "config must be a JSON object");
    static const std::set<std::string> known{"scales", "modulus", "residues", "sigma",
                                             "bootstrap_n", "seed", "zeros_path", "output_dir"};
    for (const auto& [key, value] : j.items())
      if (!known.count(key)) fail(Errc::parse, "config: unknown field '" + key + "'");
    if (j.contains("scales")) cfg.scales = field<std::vector<double>>(j, "scales");
    if (j.contains("modulus")) cfg.residues.modulus = field<std::int64_t>(j, "modulus");
    if (j.contains("residues")) cfg.residues.residues = field<std::vector<std::int64_t>>(j, "residues");
    if (j.contains("sigma")) cfg.sigma = field<double>(j, "sigma");
    if (j.contains("bootstrap_n")) cfg.bootstrap_n = field<std::size_t>(j, "bootstrap_n");
    if (j.contains("seed")) cfg.seed = field<std::uint64_t>(j, "seed");
    // Relative paths in the document resolve against its directory.
    const auto base = o.config->parent_path();
    if (j.contains("zeros_path")) cfg.zeros_path = base / field<std::string>(j, "zeros_path");
    if (j.contains("output_dir")) cfg.output_dir = base / field<std::string>(j, "output_dir");
  }
  if (o.zeros) cfg.zeros_path = *o.zeros;
  if (o.out) cfg.output_dir = *o.out;
  if (o.seed) cfg.seed = *o.seed;
  if (o.bootstrap) cfg.bootstrap_n = *o.bootstrap;
  if (o.sigma) cfg.sigma = *o.sigma;
  if (o.modulus) cfg.residues.modulus = *o.modulus;
  if (!o.residues.empty()) cfg.residues.residues = o.residues;
  if (!o.scales.empty()) cfg.scales = o.scales;
  cfg.validate();
  return cfg;
}

}  // namespace pzlab
