#include "pzlab/modular.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pzlab/error.hpp"

namespace pzlab {

TraceWitness min_hyperbolic_trace(std::int64_t N) {
  if (N < 1) fail(Errc::parameter, "level N must be positive");
  // a = 1 solves a(t - a) = 1 (mod N) at t = N + 2, so the scan stops by then.
  for (std::int64_t t = 3; t <= N + 2; ++t) {
    for (std::int64_t a = 0; a < N; ++a) {
      const std::int64_t d = t - a;
      const std::int64_t ad = a * d;
      if (((ad - 1) % N + N) % N != 0) continue;
      TraceWitness w;
      w.t_min = t;
      w.witness = {{{a, (ad - 1) / N}, {N, d}}};
      return w;
    }
  }
  fail(Errc::domain, "no hyperbolic trace found");
}

double geodesic_length(std::int64_t t) {
  if (t < 3) fail(Errc::domain, "trace below 3 is not hyperbolic");
  return 2.0 * std::acosh(static_cast<double>(t) / 2.0);
}

UvIrRatio uv_ir_ratio(double gamma1, double ell_min) {
  if (!(gamma1 > 0.0) || !(ell_min > 0.0)) fail(Errc::domain, "gamma1 and ell_min must be positive");
  UvIrRatio out;
  out.R_f = gamma1 / std::sqrt(ell_min);
  out.kappa_geo = 1.0 / out.R_f;
  return out;
}

BoundCheck odd_positive_check(const SurveyRow& row, double kappa_ir) {
  if (!(kappa_ir > 0.0)) fail(Errc::parameter, "kappa_ir must be positive");
  const double bound = 1.0 / kappa_ir;
  return {row.R_f >= bound, row.R_f - bound};
}

DualBoundReport dual_bound(double delta_P, double kappa_ir) {
  if (!(kappa_ir > 0.0)) fail(Errc::parameter, "kappa_ir must be positive");
  if (!(delta_P >= 0.0)) fail(Errc::parameter, "delta_P must be nonnegative");
  DualBoundReport rep;
  rep.delta_P = delta_P;
  rep.kappa_ir = kappa_ir;
  rep.crossover = 1.0 / std::sqrt(2.0);
  const double quantum = 1.0 / (2.0 * kappa_ir);
  const double geometric = delta_P * delta_P / kappa_ir;
  rep.bound = std::max(quantum, geometric);
  rep.regime = delta_P > rep.crossover ? BoundRegime::geometric : BoundRegime::quantum;
  return rep;
}

double family_product_bound(double ell_min, double kappa_ir) {
  if (!(kappa_ir > 0.0)) fail(Errc::parameter, "kappa_ir must be positive");
  return ell_min / kappa_ir;
}

SurveyReport survey_report(const std::vector<SurveyFixture>& fixtures, double kappa_ir) {
  SurveyReport rep;
  for (const auto& f : fixtures) {
    try {
      if (f.level_N < 1) fail(Errc::parameter, "unknown level N = " + std::to_string(f.level_N));
      if (!(f.gamma1 > 0.0)) fail(Errc::parameter, "gamma1 must be positive");
      SurveyEntry e;
      SurveyRow& row = e.row;
      row.family = f.family;
      row.weight_k = f.weight_k;
      row.level_N = f.level_N;
      row.gamma1 = f.gamma1;
      const TraceWitness w = min_hyperbolic_trace(f.level_N);
      row.t_min = w.t_min;
      row.witness = w.witness;
      row.ell_min = geodesic_length(w.t_min);
      const UvIrRatio ratio = uv_ir_ratio(f.gamma1, row.ell_min);
      row.R_f = ratio.R_f;
      row.kappa_geo = ratio.kappa_geo;
      e.bound = odd_positive_check(row, kappa_ir);
      e.product = std::sqrt(row.ell_min) * row.gamma1;
      e.product_bound = dual_bound(std::sqrt(row.ell_min), kappa_ir).bound;
      e.product_ok = e.product >= e.product_bound;
      rep.entries.push_back(std::move(e));
    } catch (const Error& err) {
      rep.errors.push_back({f.family, f.level_N, err.what()});
    }
  }
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const SurveyEntry& a, const SurveyEntry& b) {
                     if (a.row.weight_k != b.row.weight_k) return a.row.weight_k < b.row.weight_k;
                     return a.row.level_N < b.row.level_N;
                   });
  return rep;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto a = cell.find_first_not_of(" \t\r");
    const auto b = cell.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? std::string() : cell.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::vector<SurveyFixture> read_survey_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open fixture file " + path.string());
  std::vector<SurveyFixture> out;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    const auto cells = split_csv(line);
    if (header) {
      if (cells != std::vector<std::string>{"family", "k", "N", "gamma1"})
        fail(Errc::parse, path.string() + ": header must be family,k,N,gamma1");
      header = false;
      continue;
    }
    if (cells.size() != 4)
      fail(Errc::parse, path.string() + ":" + std::to_string(line_no) + ": expected 4 fields");
    try {
      std::size_t used = 0;
      SurveyFixture f;
      f.family = cells[0];
      f.weight_k = std::stoi(cells[1], &used);
      if (used != cells[1].size()) throw std::invalid_argument("k");
      f.level_N = std::stoll(cells[2], &used);
      if (used != cells[2].size()) throw std::invalid_argument("N");
      f.gamma1 = std::stod(cells[3], &used);
      if (used != cells[3].size()) throw std::invalid_argument("gamma1");
      out.push_back(std::move(f));
    } catch (const std::logic_error&) {
      fail(Errc::parse, path.string() + ":" + std::to_string(line_no) + ": malformed number");
    }
  }
  if (header) fail(Errc::parse, path.string() + ": missing header");
  return out;
}

}  // namespace pzlab
