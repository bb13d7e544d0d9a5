#include <gtest/gtest.h>

#include <cmath>

#include "relloc/verify.hpp"

using namespace relloc;

TEST(Verify, EverySuitePassesWithDefaults) {
  RunConfig cfg;
  cfg.samples = 20;
  for (const auto& name : suite_names()) {
    const Report r = run_suite(name, cfg);
    EXPECT_FALSE(r.checks.empty()) << name;
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed()) << name << "/" << c.name << " = " << c.value;
  }
}

TEST(Verify, DeterministicForFixedSeed) {
  RunConfig cfg;
  cfg.samples = 10;
  cfg.seed = 7;
  EXPECT_EQ(run_suite("covariance", cfg).to_csv(), run_suite("covariance", cfg).to_csv());
  cfg.seed = 8;
  const std::string other = run_suite("covariance", cfg).to_csv();
  cfg.seed = 7;
  EXPECT_NE(run_suite("covariance", cfg).to_csv(), other);
}

TEST(Verify, ReportFormats) {
  RunConfig cfg;
  cfg.samples = 5;
  const Report r = run_suite("algebra", cfg);
  const std::string csv = r.to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,check,value,bound,threshold,status");
  EXPECT_NE(r.to_json().find("\"suite\""), std::string::npos);
}

TEST(Verify, OverrideReplacesUpperBounds) {
  RunConfig cfg;
  cfg.samples = 5;
  cfg.tolerance_overrides["algebra"] = 1e-300;
  cfg.tolerance_overrides["covariance"] = 1e300;
  for (const auto& c : run_suite("algebra", cfg).checks) {
    if (c.bound == Check::Bound::AtMost) {
      EXPECT_EQ(c.threshold, 1e-300);
    }
  }
  for (const auto& c : run_suite("covariance", cfg).checks) {
    if (c.bound == Check::Bound::AtMost) {
      EXPECT_EQ(c.threshold, 1e300);
    }
  }
}

TEST(Verify, RejectsBadInput) {
  RunConfig cfg;
  EXPECT_FALSE(has_suite("nope"));
  EXPECT_THROW(run_suite("nope", cfg), std::invalid_argument);
  cfg.samples = 0;
  EXPECT_THROW(run_suite("algebra", cfg), std::invalid_argument);
  cfg.samples = 5;
  cfg.c = -1.0;
  EXPECT_THROW(run_suite("algebra", cfg), std::invalid_argument);
}

TEST(Verify, NanFails) {
  Check c{"x", std::nan(""), 1.0, Check::Bound::AtMost};
  EXPECT_FALSE(c.passed());
  c.bound = Check::Bound::AtLeast;
  EXPECT_FALSE(c.passed());
}
