#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "su2w/cli.hpp"
#include "su2w/coherent.hpp"
#include "su2w/gallery.hpp"

using namespace su2w;
using namespace su2w::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream l(line);
    for (std::string cell; std::getline(l, cell, ',');) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.1234567890123456), "0.123456789012");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(-1e-300 * 1e-300), "0");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(1.0 / 0.0), "inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(1.5e-20), "1.5e-20");
}

TEST(ParseSpin, AcceptsIntegersDecimalsAndHalves) {
  EXPECT_EQ(parse_spin("10").twice_j(), 20);
  EXPECT_EQ(parse_spin("2.5").twice_j(), 5);
  EXPECT_EQ(parse_spin("5/2").twice_j(), 5);
  EXPECT_EQ(parse_spin("0").twice_j(), 0);
  EXPECT_THROW(parse_spin("0.3"), std::invalid_argument);
  EXPECT_THROW(parse_spin("-1"), std::invalid_argument);
  EXPECT_THROW(parse_spin("5/3"), std::invalid_argument);
  EXPECT_THROW(parse_spin("ten"), std::invalid_argument);
}

TEST(ParseDirection, NormalizesInput) {
  const Direction d = parse_direction("1,1,0");
  EXPECT_NEAR(d[0], 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(d[2], 0.0, 1e-15);
  EXPECT_THROW(parse_direction("0,0,0"), std::invalid_argument);
  EXPECT_THROW(parse_direction("1,2"), std::invalid_argument);
}

TEST(ParseState, FamiliesAndMatrices) {
  const nlohmann::json cat = {{"family", "cat"}};
  EXPECT_EQ(parse_state(cat, SpinJ(6)).spin().twice_j(), 6);
  EXPECT_THROW(parse_state(cat, std::nullopt), std::invalid_argument);
  EXPECT_EQ(parse_state({{"family", "cat"}, {"j", 2}}, std::nullopt).spin().twice_j(), 4);

  const DensityOperator coh = parse_state({{"family", "coherent"}, {"theta", 1.0}, {"phi", 0.5}}, SpinJ(4));
  const VectorXc c = coherent_amplitudes(SpinJ(4), {1.0, 0.5});
  EXPECT_LT(max_abs(coh.matrix() - c * c.adjoint()), 1e-14);

  const DensityOperator sup = parse_state({{"family", "superposition"}}, SpinJ(4), 0.5);
  EXPECT_NEAR(sup.matrix()(4, 4).real(), 0.5, 1e-14);
  EXPECT_THROW(parse_state({{"family", "superposition"}}, SpinJ(4)), std::invalid_argument);
  EXPECT_THROW(parse_state({{"family", "nope"}}, SpinJ(4)), std::invalid_argument);

  const nlohmann::json m = nlohmann::json::parse(R"([[{"re":0.5,"im":0},{"re":0,"im":0.5}],[{"re":0,"im":-0.5},{"re":0.5,"im":0}]])");
  const DensityOperator a = parse_state(m, std::nullopt);
  EXPECT_EQ(a.spin().twice_j(), 1);
  EXPECT_NEAR(a.matrix()(0, 1).imag(), 0.5, 1e-15);
  EXPECT_EQ(parse_state({{"matrix", m}}, std::nullopt).spin().twice_j(), 1);
  EXPECT_THROW(parse_state(m, SpinJ(2)), std::invalid_argument);
}

TEST(Fig1, SpinOneReference) {
  // p(0) = 1/2 against Q_max = 3/8 at theta = pi/2
  const Table t = fig1(SpinJ(2));
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_NEAR(t.number(1, "p_jm"), 0.5, 1e-12);
  EXPECT_NEAR(t.number(1, "bound"), 0.375, 1e-9);
  EXPECT_TRUE(t.flag(1, "violated"));
  EXPECT_FALSE(t.flag(0, "violated"));
}

TEST(Fig1, SpinHalfHasNoViolation) {
  const Table t = fig1(SpinJ(1));
  for (std::size_t r = 0; r < t.rows.size(); ++r) EXPECT_FALSE(t.flag(r, "violated"));
}

TEST(Fig1, JTenViolatesOnlyTheCentralOutcomes) {
  const Table t = fig1(SpinJ(20));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    EXPECT_EQ(t.flag(r, "violated"), std::abs(t.number(r, "m")) <= 1) << "m = " << t.number(r, "m");
  }
}

TEST(Fig2, Su2BoundSitsAboveQuadratureBound) {
  const Table t = fig2(SpinJ(20));
  ASSERT_EQ(t.rows.size(), 21u);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    EXPECT_GT(t.number(r, "su2_bound"), t.number(r, "quadrature_bound"));
  }
  const Table big = fig2(SpinJ(80));
  EXPECT_GT(big.number(40, "su2_bound") / big.number(40, "quadrature_bound"),
            t.number(10, "su2_bound") / t.number(10, "quadrature_bound"));
}

TEST(Fig3, CatViolatesAtEvenOutcomes) {
  const Table t = fig3(SpinJ(20));
  int violated = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) violated += t.flag(r, "violated");
  EXPECT_EQ(violated, 3);
  EXPECT_TRUE(t.flag(10, "violated"));
  EXPECT_TRUE(t.flag(8, "violated"));
  EXPECT_TRUE(t.flag(12, "violated"));
}

TEST(Fig4, EtaOneReproducesCoherentStatistics) {
  const SpinJ j(20);
  const Table t = fig4(j, 1.0);
  const DensityOperator rho(intelligent_state(j, 1.0).state);
  const Eigen::Vector3d n = mean_spin(rho).normalized();
  const SphereDirection omega(std::acos(std::clamp(n.z(), -1.0, 1.0)), std::atan2(n.y(), n.x()));
  const auto coh = measurement_statistics(DensityOperator(coherent_state(j, omega)), Direction::x());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    EXPECT_FALSE(t.flag(r, "violated"));
    EXPECT_NEAR(t.number(r, "p_jm"), coh[Index(r)], 1e-8);
  }
}

TEST(Fig4, HalfViolatesCentralOutcomes) {
  const Table t = fig4(SpinJ(20), 0.5);
  EXPECT_TRUE(t.flag(10, "violated"));
  EXPECT_NEAR(t.number(10, "p_jm"), 0.255450792357, 1e-9);
}

TEST(Fig5, BoundIsConstantAndOnlyEtaOneIsClassical) {
  const Table t = fig5(SpinJ(20), eta_grid(0.1));
  ASSERT_EQ(t.rows.size(), 10u);
  const double bound = t.number(0, "bound");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    EXPECT_DOUBLE_EQ(t.number(r, "bound"), bound);
    const double eta = t.number(r, "eta");
    if (eta < 1) {
      EXPECT_TRUE(t.flag(r, "violated")) << "eta = " << eta;
    } else {
      EXPECT_FALSE(t.flag(r, "violated"));
      EXPECT_NEAR(t.number(r, "p_m0"), bound, 1e-8);
    }
  }
  EXPECT_THROW(fig5(SpinJ(21), eta_grid(0.1)), std::invalid_argument);
}

TEST(EtaGrid, EndsAtOne) {
  const auto g = eta_grid(0.05);
  ASSERT_EQ(g.size(), 20u);
  EXPECT_NEAR(g.front(), 0.05, 1e-15);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_EQ(eta_grid(0.3).back(), 1.0);
}

TEST(Run, CsvViolatedColumnMatchesRenderedNumbers) {
  for (const std::vector<std::string> args : {std::vector<std::string>{"fig1", "--j", "10"},
                                              {"fig3", "--j", "10"},
                                              {"fig4", "--j", "10", "--eta", "0.4"}}) {
    const Outcome o = invoke(args);
    ASSERT_EQ(o.code, 0) << o.err;
    const auto rows = parse_csv(o.out);
    ASSERT_EQ(rows[0], (std::vector<std::string>{"m", "p_jm", "bound", "violated"}));
    for (std::size_t r = 1; r < rows.size(); ++r) {
      const double p = std::stod(rows[r][1]), b = std::stod(rows[r][2]);
      // 12-digit rounding cannot flip a decision separated by more than the tolerance
      if (std::abs(p - b) > 1e-9) EXPECT_EQ(rows[r][3], p > b + 1e-10 ? "true" : "false") << args[0];
    }
  }
}

TEST(Run, JsonOutputParses) {
  const Outcome o = invoke({"fig2", "--j", "5/2", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  const auto doc = nlohmann::json::parse(o.out);
  ASSERT_EQ(doc.size(), 6u);
  EXPECT_DOUBLE_EQ(doc[0]["m"].get<double>(), -2.5);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"fig9"}).code, 1);
  EXPECT_EQ(invoke({"fig1", "--j", "0.3"}).code, 1);
  EXPECT_EQ(invoke({"fig1", "--eta", "0.5"}).code, 1);
  EXPECT_EQ(invoke({"fig4", "--eta", "1.5"}).code, 1);
  EXPECT_EQ(invoke({"fig4", "--eta", "0"}).code, 1);
  EXPECT_EQ(invoke({"fig5", "--j", "5/2"}).code, 1);
  EXPECT_EQ(invoke({"fig1", "--format", "xml"}).code, 1);
  EXPECT_EQ(invoke({"report"}).code, 1);
  EXPECT_EQ(invoke({"report", "--state", "{not json"}).code, 1);
  EXPECT_EQ(invoke({"report", "--state", R"({"family":"cat"})", "--direction", "0,0,0"}).code, 1);
  EXPECT_EQ(invoke({"fig2", "--j", "3"}).code, 0);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Run, ReportOnCatStateIsUndefinedButViolates) {
  const Outcome o = invoke({"report", "--j", "10", "--state", R"({"family":"cat"})", "--direction", "1,0,0",
                            "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["squeezing"]["status"], "undefined");
  EXPECT_TRUE(doc["squeezing"]["uncertainty"]["satisfied"].is_null());
  EXPECT_TRUE(doc["squeezing"]["min_perp_variance"].is_null());
  EXPECT_TRUE(doc["outcomes"][10]["violated"].get<bool>());
  EXPECT_NEAR(doc["squeezing"]["axis_variances"][2].get<double>(), 100.0, 1e-9);
}

TEST(Run, ReportCsvSections) {
  const Outcome o = invoke({"report", "--j", "3", "--state", R"({"family":"intelligent","eta":0.5})",
                            "--direction", "1,0,0"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out.rfind("# outcomes\nm,probability,bound,violated,violation_ratio\n", 0), 0u);
  EXPECT_NE(o.out.find("# squeezing\nquantity,value\nstatus,defined\n"), std::string::npos);
  EXPECT_NE(o.out.find("uncertainty_satisfied,true"), std::string::npos);
}

TEST(Run, ReportAcceptsExplicitMatrix) {
  const std::string m = R"({"matrix":[[{"re":1,"im":0},{"re":0,"im":0}],[{"re":0,"im":0},{"re":0,"im":0}]]})";
  const Outcome o = invoke({"report", "--state", m, "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_DOUBLE_EQ(doc["j"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(doc["outcomes"][0]["probability"].get<double>(), 1.0);
}

TEST(Run, ToleranceFromEnvironment) {
  // a huge tolerance silences every violation; --tol wins over the environment
  ::setenv("SU2W_TOL", "1", 1);
  const Outcome quiet = invoke({"fig3", "--j", "10"});
  const Outcome loud = invoke({"fig3", "--j", "10", "--tol", "1e-10"});
  ::setenv("SU2W_TOL", "abc", 1);
  const Outcome bad = invoke({"fig3", "--j", "10"});
  ::unsetenv("SU2W_TOL");
  EXPECT_EQ(quiet.out.find("true"), std::string::npos);
  EXPECT_NE(loud.out.find("true"), std::string::npos);
  EXPECT_EQ(bad.code, 1);
}

TEST(Run, OutputIsDeterministic) {
  const std::vector<std::string> args{"fig1", "--j", "6", "--format", "json"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Run, OutFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "su2w_cli_test_out.csv";
  ASSERT_EQ(invoke({"fig4", "--j", "4", "--out", path.string()}).code, 0);
  std::ifstream f(path);
  const std::string written((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  std::filesystem::remove(path);
  EXPECT_EQ(written, invoke({"fig4", "--j", "4"}).out);
}
