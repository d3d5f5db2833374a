#include <gtest/gtest.h>

#include "schmidt/errors.hpp"
#include "schmidt/verify.hpp"

using namespace schmidt;

TEST(Verify, ParsesTheoremNames) {
  EXPECT_EQ(parse_theorem("p=q"), Theorem::p_eq_q);
  EXPECT_EQ(parse_theorem("h=d"), Theorem::h_eq_d);
  EXPECT_EQ(parse_theorem("pbar=qbar"), Theorem::pbar_eq_qbar);
  EXPECT_EQ(parse_theorem("p̄=q̄"), Theorem::pbar_eq_qbar);
  EXPECT_EQ(parse_theorem("f̄=ḡ"), Theorem::fbar_eq_gbar);
  EXPECT_EQ(parse_theorem("over-durfee"), Theorem::over_durfee);
  EXPECT_FALSE(parse_theorem("x=y").has_value());
}

TEST(Verify, EveryTheoremPassesSmall) {
  for (Theorem th : {Theorem::p_eq_q, Theorem::f_eq_g, Theorem::h_eq_d, Theorem::pbar_eq_qbar, Theorem::fbar_eq_gbar,
                     Theorem::durfee, Theorem::over_durfee, Theorem::staircase}) {
    const auto report = verify_bijection(th, 5, 2);
    EXPECT_TRUE(report.ok()) << format_report(report);
    EXPECT_FALSE(report.cells.empty());
  }
}

TEST(Verify, CellsAreOrderedAndCountsMatch) {
  const auto report = verify_bijection(Theorem::p_eq_q, 8, 3);
  for (std::size_t i = 1; i < report.cells.size(); ++i) EXPECT_LT(report.cells[i - 1].cell, report.cells[i].cell);
  for (const auto& c : report.cells) EXPECT_EQ(c.lhs, c.rhs);
}

TEST(Verify, ThreadsGiveIdenticalReports) {
  VerifyOptions one, many;
  many.threads = 4;
  const auto a = verify_bijection(Theorem::fbar_eq_gbar, 6, 2, one);
  const auto b = verify_bijection(Theorem::fbar_eq_gbar, 6, 2, many);
  EXPECT_EQ(report_json(a), report_json(b));
}

TEST(Verify, CorruptedMappingIsCaught) {
  VerifyOptions opts;
  opts.corrupt_mapping = true;
  const auto report = verify_bijection(Theorem::f_eq_g, 5, 2, opts);
  EXPECT_FALSE(report.ok());
  bool witnessed = false;
  for (const auto& c : report.cells) witnessed = witnessed || (!c.ok && c.witness.has_value());
  EXPECT_TRUE(witnessed);
  EXPECT_NE(format_report(report).find("FAILED"), std::string::npos);
}

TEST(Verify, JsonSchema) {
  const auto j = report_json(verify_bijection(Theorem::pbar_eq_qbar, 3, 2));
  ASSERT_TRUE(j.contains("cells"));
  for (const auto& c : j["cells"]) {
    EXPECT_TRUE(c.contains("cell") && c.contains("lhs") && c.contains("rhs") && c.contains("ok") &&
                c.contains("witness"));
    EXPECT_TRUE(c["cell"].contains("s"));
  }
}
