#include "rpbs/export.hpp"

#include <gtest/gtest.h>

using namespace rpbs;

TEST(Export, RoundingIsStable) {
  EXPECT_EQ(round_for_report(0.1 + 0.2), 0.3);
  EXPECT_EQ(round_for_report(2.5), 2.5);
  EXPECT_EQ(round_for_report(-0.0), 0.0);
}

TEST(Export, RationalAndMatrix) {
  EXPECT_EQ(rational_json(rat(-3, 4)), (json{{"num", "-3"}, {"den", "4"}}));
  const auto g = Metric(RepParams(2, 1)).block(1, 1);
  const json j = gram_json(g, 2);
  EXPECT_EQ(j["schema"], kSchemaVersion);
  EXPECT_EQ(j["basis"], (json{"1,1,a", "1,1,b"}));
  EXPECT_EQ(j["entries"][0][1], rational_json(2));
}

TEST(Export, MatrixCsvHasBasisHeader) {
  const auto kets = block_kets(2, 1, 1);
  const auto m = materialize(named_operator(NamedOperator::T), RepParams(2, 5), kets);
  const std::string csv = matrix_csv(kets, m);
  EXPECT_EQ(csv.rfind("# basis:", 0), 0u);
  EXPECT_NE(csv.find("-2,0\n4,2\n"), std::string::npos) << csv;
}

TEST(Export, DeterministicSpectrum) {
  HamiltonianParams h;
  const auto a = spectrum_json(spectrum(3, h, 3), 3, h).dump(2);
  const auto b = spectrum_json(spectrum(3, h, 3), 3, h).dump(2);
  EXPECT_EQ(a, b);
}

TEST(Export, TrajectoryCsvColumns) {
  const Metric M(RepParams(2, 3));
  HamiltonianParams h;
  const auto tr = evolve(M, h, 2, State(alpha(1, 1)), {0.0, 1.0});
  const std::string csv = trajectory_csv(tr);
  EXPECT_EQ(csv.rfind("t,ket,re,im,abs2\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * static_cast<long>(tr.kets.size()));
  EXPECT_NE(csv.find("0,\"1,1,a\","), std::string::npos) << csv;
}

TEST(Export, GradingReport) {
  const auto j = grading_json(relation_catalog(), {kMainGrading, kAltGrading});
  ASSERT_EQ(j["relations"].size(), 36u);
  for (const auto& r : j["relations"]) {
    EXPECT_TRUE(r["degrees"]["MAIN"].is_string()) << r["name"];
    EXPECT_TRUE(r["degrees"]["ALT"].is_string()) << r["name"];
  }
}
