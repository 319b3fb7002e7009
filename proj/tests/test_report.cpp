#include <filesystem>

#include "doctest.h"
#include "pzlab/error.hpp"
#include "pzlab/report.hpp"

using namespace pzlab;

namespace {

SweepRecord record(double L, double dP, double zr) {
  DimensionEstimate d;
  d.value = dP;
  d.ci_lo = dP - 0.01;
  d.ci_hi = dP + 0.02;
  const auto z = RegularityEstimate::from_H(2 - zr, 2 - zr - 0.03, 2 - zr + 0.01, DimensionMethod::variation, {});
  return make_record(L, d, z);
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(1.0 / 3) == "0.333333333333");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
  }

  TEST_CASE("sweep CSV round trip") {
    const std::vector<SweepRecord> recs{record(400, 0.8, 1.9), record(1000, 0.81234567, 1.93)};
    const auto csv = sweep_csv(recs);
    CHECK(csv.rfind("L,dP,dP_lo,dP_hi,zetaR,zetaR_lo,zetaR_hi,K,C_beta2,C_beta4\n", 0) == 0);
    const auto back = parse_sweep_csv(csv);
    REQUIRE(back.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(back[i].L == recs[i].L);
      CHECK(back[i].d_P.value == doctest::Approx(recs[i].d_P.value).epsilon(1e-11));
      CHECK(back[i].zeta_R.ci_lo == doctest::Approx(recs[i].zeta_R.ci_lo).epsilon(1e-11));
      CHECK(back[i].K == doctest::Approx(recs[i].K).epsilon(1e-11));
      CHECK(back[i].C_beta4 == doctest::Approx(recs[i].C_beta4).epsilon(1e-11));
    }
    CHECK(sweep_csv(back) == csv);
    CHECK_THROWS_AS(parse_sweep_csv(""), Error);
    CHECK_THROWS_AS(parse_sweep_csv("x,y\n1,2\n"), Error);
    CHECK_THROWS_AS(parse_sweep_csv("L,dP,\n1,2,3\n"), Error);
    CHECK_THROWS_AS(parse_sweep_csv("L,dP,\n1,2,3,4,5,6,7,8,9,zz\n"), Error);
  }

  TEST_CASE("other CSV layouts") {
    const PointSet ps({0.25, 0.5}, 0.0, 1.0);
    CHECK(point_set_csv(ps) == "position\n0.25\n0.5\n");
    const SampledField f({1, 2, 3, 4, 5, 6, 7, 8}, 0.0, 0.5, Boundary::clamped);
    CHECK(field_csv(f).rfind("x,value\n0,1\n0.5,2\n1,3\n", 0) == 0);
    KTrajectory k;
    k.lnL = {0.0};
    k.K_ode = {7.5};
    CHECK(k_trajectory_csv(k) == "lnL,K\n0,7.5\n");
    FlowTrajectory ft;
    ft.t = {0.0};
    ft.I_P = {3.0};
    ft.I_Z = {1.0};
    CHECK(flow_trajectory_csv(ft) == "t,IP,IZ\n0,3,1\n");
    const auto survey = survey_report({{"11a3", 2, 11, 5.242}});
    const auto csv = survey_csv(survey);
    CHECK(csv.rfind("family,k,N,t_min,ell_min,gamma1,R_f,kappa_geo,bound_ok,margin\n11a3,2,11,3,", 0) == 0);
    CHECK(csv.find(",true,") != std::string::npos);
  }

  TEST_CASE("JSON reports") {
    const ModifiedFlowSpec spec{0.685, 0.003, 0.581, 1.0, 4.0};
    const auto j = stability_json(spec, modified_flow_analysis(spec));
    CHECK(j["kappa"].get<double>() == 0.685);
    CHECK(j["det"].get<double>() == doctest::Approx(0.476197).epsilon(1e-6));
    CHECK(j["fixed_point"][0].get<double>() == 2.0);
    CHECK(j.begin().key() == "kappa");
    CHECK(j.dump() == stability_json(spec, modified_flow_analysis(spec)).dump());

    FitReportEntry e;
    e.fit.model = ScalingModel::linear_inv;
    e.fit.c_inf = 4.0;
    e.cv_ok = false;
    const std::vector<FitReportEntry> entries{e};
    const auto arr = fit_report_json(entries);
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["model"] == "linear_inv");
    CHECK(arr[0]["cv_mse"].is_null());
  }

  TEST_CASE("atomic file writes") {
    const auto dir = std::filesystem::temp_directory_path() / "pzlab_report_test";
    std::filesystem::create_directories(dir);
    const auto p = dir / "out.csv";
    write_text_file(p, "a,b\n1,2\n");
    CHECK(read_text_file(p) == "a,b\n1,2\n");
    write_text_file(p, "c\n");
    CHECK(read_text_file(p) == "c\n");
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      CHECK(entry.path().filename() == "out.csv");
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/x.csv", "x"), Error);
    CHECK_THROWS_AS(read_text_file(dir / "missing.csv"), Error);
    std::filesystem::remove_all(dir);
  }
}
