#include "pzlab/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "pzlab/error.hpp"

namespace pzlab {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  return fmt::format("{:.12g}", x);
}

std::string point_set_csv(const PointSet& points) {
  std::string out = "position\n";
  for (double x : points.positions()) out += format_number(x) + "\n";
  return out;
}

std::string field_csv(const SampledField& field) {
  std::string out = "x,value\n";
  const auto v = field.values();
  for (std::size_t i = 0; i < v.size(); ++i)
    out += format_number(field.x_at(i)) + "," + format_number(v[i]) + "\n";
  return out;
}

std::string profile_csv(const VariationProfile& profile) {
  std::string out = "s,F\n";
  for (std::size_t i = 0; i < profile.lags.size(); ++i)
    out += format_number(profile.lags[i]) + "," + format_number(profile.f_values[i]) + "\n";
  return out;
}

std::string sweep_csv(std::span<const SweepRecord> records) {
  std::string out = "L,dP,dP_lo,dP_hi,zetaR,zetaR_lo,zetaR_hi,K,C_beta2,C_beta4\n";
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", format_number(r.L),
                       format_number(r.d_P.value), format_number(r.d_P.ci_lo),
                       format_number(r.d_P.ci_hi), format_number(r.zeta_R.zeta_R),
                       format_number(r.zeta_R.ci_lo), format_number(r.zeta_R.ci_hi),
                       format_number(r.K), format_number(r.C_beta2), format_number(r.C_beta4));
  }
  return out;
}

std::string k_trajectory_csv(const KTrajectory& traj) {
  std::string out = "lnL,K\n";
  for (std::size_t i = 0; i < traj.lnL.size(); ++i)
    out += format_number(traj.lnL[i]) + "," + format_number(traj.K_ode[i]) + "\n";
  return out;
}

std::string flow_trajectory_csv(const FlowTrajectory& traj) {
  std::string out = "t,IP,IZ\n";
  for (std::size_t i = 0; i < traj.t.size(); ++i)
    out += format_number(traj.t[i]) + "," + format_number(traj.I_P[i]) + "," +
           format_number(traj.I_Z[i]) + "\n";
  return out;
}

std::string survey_csv(const SurveyReport& report) {
  std::string out = "family,k,N,t_min,ell_min,gamma1,R_f,kappa_geo,bound_ok,margin\n";
  for (const auto& e : report.entries) {
    const auto& r = e.row;
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.family, r.weight_k, r.level_N,
                       r.t_min, format_number(r.ell_min), format_number(r.gamma1),
                       format_number(r.R_f), format_number(r.kappa_geo),
                       e.bound.satisfied ? "true" : "false", format_number(e.bound.margin));
  }
  return out;
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<SweepRecord> out;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      if (line.rfind("L,dP,", 0) != 0) fail(Errc::parse, "sweep CSV header not recognised");
      header = false;
      continue;
    }
    std::vector<double> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t used = 0;
        cells.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::logic_error&) {
        fail(Errc::parse, "sweep CSV line " + std::to_string(line_no) + ": bad number");
      }
    }
    if (cells.size() != 10)
      fail(Errc::parse, "sweep CSV line " + std::to_string(line_no) + ": expected 10 columns");
    SweepRecord r;
    r.L = cells[0];
    r.d_P.value = cells[1];
    r.d_P.ci_lo = cells[2];
    r.d_P.ci_hi = cells[3];
    r.zeta_R.zeta_R = cells[4];
    r.zeta_R.H = 2.0 - cells[4];
    r.zeta_R.ci_lo = cells[5];
    r.zeta_R.ci_hi = cells[6];
    r.K = cells[7];
    r.C_beta2 = cells[8];
    r.C_beta4 = cells[9];
    out.push_back(r);
  }
  if (header) fail(Errc::parse, "sweep CSV is empty");
  return out;
}

nlohmann::ordered_json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return nlohmann::ordered_json::parse(format_number(x));
}

nlohmann::ordered_json fit_report_json(std::span<const FitReportEntry> entries) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["model"] = std::string(to_string(e.fit.model));
    j["c_inf"] = json_number(e.fit.c_inf);
    j["a"] = json_number(e.fit.a);
    j["b"] = json_number(e.fit.b);
    j["rss"] = json_number(e.fit.rss);
    j["aic"] = json_number(e.fit.aic);
    j["delta_aic"] = json_number(e.delta_aic);
    j["cv_mse"] = e.cv_ok ? json_number(e.cv_mse) : nlohmann::ordered_json(nullptr);
    j["n"] = e.fit.n;
    j["degenerate"] = e.fit.degenerate;
    j["b_at_bound"] = e.fit.b_at_bound;
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::ordered_json stability_json(const ModifiedFlowSpec& spec, const StabilityReport& rep) {
  nlohmann::ordered_json j;
  j["kappa"] = json_number(spec.kappa);
  j["mu"] = json_number(spec.mu);
  j["nu"] = json_number(spec.nu);
  j["r"] = json_number(spec.r);
  j["K_inf"] = json_number(spec.K_inf);
  j["M"] = {{json_number(rep.M[0][0]), json_number(rep.M[0][1])}, {json_number(rep.M[1][0]), json_number(rep.M[1][1])}};
  j["trace"] = json_number(rep.trace);
  j["det"] = json_number(rep.det);
  j["eigenvalues"] = {{{"re", json_number(rep.eigenvalues[0].real())}, {"im", json_number(rep.eigenvalues[0].imag())}},
                      {{"re", json_number(rep.eigenvalues[1].real())}, {"im", json_number(rep.eigenvalues[1].imag())}}};
  j["eigen_real_parts"] = {json_number(rep.eigen_real_parts[0]), json_number(rep.eigen_real_parts[1])};
  j["b_eff"] = json_number(rep.b_eff);
  j["fixed_point"] = {json_number(rep.fixed_point[0]), json_number(rep.fixed_point[1])};
  j["fixed_point_residual"] = {json_number(rep.fixed_point_residual[0]), json_number(rep.fixed_point_residual[1])};
  j["equilibrium"] = {json_number(rep.equilibrium[0]), json_number(rep.equilibrium[1])};
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io, "cannot write " + tmp.string());
    out << text;
    if (!out) fail(Errc::io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(Errc::io, "cannot move " + tmp.string() + " into place: " + ec.message());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pzlab
