#include <gtest/gtest.h>

#include <cmath>

#include "steklov/error.hpp"
#include "steklov/harness.hpp"

using namespace steklov;

namespace {

RunConfig constant_config(std::complex<double> n) {
  RunConfig c;
  c.medium = constant_medium(n);
  return c;
}

const CheckResult* find_check(const ValidationReport& report, const std::string& name) {
  for (const auto& c : report.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST(LogLogSlope, ExactPowerLaw) {
  const std::vector<double> x{10, 15, 20, 25};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -1.5));
  EXPECT_NEAR(*loglog_slope(x, y), -1.5, 1e-12);
  EXPECT_FALSE(loglog_slope({1.0}, {1.0}).has_value());
  EXPECT_FALSE(loglog_slope({1.0, 2.0}, {0.0, 1.0}).has_value());
}

TEST(ConvergenceStudy, ConstantMediumTable) {
  const auto table = convergence_study(constant_config(2.0), {10, 15, 20, 25});
  ASSERT_EQ(table.rows.size(), 4U);
  ASSERT_TRUE(table.exact.has_value());
  EXPECT_NEAR(table.exact->real(), 1.3771053, 1e-6);
  const std::vector<double> expected{1.1872162, 1.2500365, 1.2816379};
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(table.rows[i].lambda.real(), expected[i], 1e-4);
  EXPECT_NEAR(*table.rows[3].rel_error, 0.0554693, 1e-4);
  for (std::size_t i = 1; i < table.rows.size(); ++i) EXPECT_LT(*table.rows[i].rel_error, *table.rows[i - 1].rel_error);
  ASSERT_TRUE(table.slope.has_value());
  EXPECT_GE(*table.slope, -1.3);
  EXPECT_LE(*table.slope, -0.7);
}

TEST(ConvergenceStudy, AbsorbingMediumTable) {
  const auto table = convergence_study(constant_config({2.0, 1.0}), {10, 15, 20, 25});
  EXPECT_NEAR(table.rows[3].lambda.real(), 1.14957, 1e-4);
  EXPECT_NEAR(table.rows[3].lambda.imag(), 0.83424, 1e-4);
  for (std::size_t i = 1; i < table.rows.size(); ++i) EXPECT_LT(*table.rows[i].rel_error, *table.rows[i - 1].rel_error);
  EXPECT_GE(*table.slope, -1.3);
  EXPECT_LE(*table.slope, -0.7);
}

TEST(ConvergenceStudy, RepeatedTruncationGivesIdenticalRows) {
  const auto table = convergence_study(constant_config(2.0), {25, 25});
  ASSERT_EQ(table.rows.size(), 2U);
  EXPECT_EQ(table.rows[0].lambda, table.rows[1].lambda);
  EXPECT_EQ(table.rows[0].rel_error, table.rows[1].rel_error);
}

TEST(ConvergenceStudy, NoOracleForInclusions) {
  RunConfig c;
  c.medium = disk_inclusion(0.5, 2.0);
  const auto table = convergence_study(c, {10, 25});
  EXPECT_FALSE(table.exact.has_value());
  EXPECT_FALSE(table.rows[0].rel_error.has_value());
  EXPECT_FALSE(table.slope.has_value());
}

TEST(ConvergenceStudy, Errors) {
  EXPECT_THROW(convergence_study(constant_config(2.0), {}), ConfigError);
  EXPECT_THROW(convergence_study(constant_config(2.0), {26}), ConfigError);
  EXPECT_THROW(convergence_study(constant_config(2.0), {20, 10}), ConfigError);
}

TEST(ProjectionStudy, BumpFunctionRates) {
  const auto study = projection_rate_study("bump", {8, 16, 32, 64});
  ASSERT_EQ(study.rows.size(), 4U);
  EXPECT_EQ(study.reference_size, 256U);
  EXPECT_LE(study.tail_fraction, kProjectionTailLimit);
  for (std::size_t i = 1; i < study.rows.size(); ++i) {
    EXPECT_LT(study.rows[i].l2_error, study.rows[i - 1].l2_error);
    EXPECT_LT(study.rows[i].h1_error, study.rows[i - 1].h1_error);
  }
  ASSERT_TRUE(study.l2_slope.has_value());
  EXPECT_LE(*study.l2_slope, -0.6);
  EXPECT_LT(*study.l2_slope, *study.h1_slope);  // faster in L2 than in H1
}

TEST(ProjectionStudy, BasisFunctionIsReproduced) {
  const auto study = projection_rate_study("basis:3", {3, 5, 10});
  for (const auto& row : study.rows) {
    EXPECT_LE(row.l2_error, 1e-12) << row.N;
    EXPECT_LE(row.h1_error, 1e-10) << row.N;
  }
  const auto below = projection_rate_study("basis:3", {2});
  EXPECT_NEAR(below.rows[0].l2_error, 1.0, 1e-10);
}

TEST(ProjectionStudy, RadialFunctionHasNoAngularContent) {
  // The bump is radially symmetric, so only p = 0 modes carry its content.
  // The first three sigma-ascending modes are (0,1), (1,1) and (2,1); adding
  // the last two leaves the error unchanged.
  const auto study = projection_rate_study("bump", {1, 2, 3, 64});
  EXPECT_NEAR(study.rows[0].l2_error, study.rows[1].l2_error, 1e-12);
  EXPECT_NEAR(study.rows[1].l2_error, study.rows[2].l2_error, 1e-12);
  EXPECT_LT(study.rows[3].l2_error, study.rows[2].l2_error);
}

TEST(ProjectionStudy, Errors) {
  EXPECT_THROW(projection_rate_study("gaussian", {8}), ConfigError);
  EXPECT_THROW(projection_rate_study("basis:0", {8}), ConfigError);
  EXPECT_THROW(projection_rate_study("bump", {}), ConfigError);
  // With sines, 4 * 64 reference terms leave too large a tail.
  EXPECT_THROW(projection_rate_study("bump", {8, 16, 32, 64}, true), NumericalError);
}

TEST(BoundaryError, DecreasesWithTruncation) {
  const auto rows = boundary_eigenfunction_error(constant_config(2.0), {10, 15, 20, 25});
  ASSERT_EQ(rows.size(), 4U);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].l2_boundary_error, rows[i - 1].l2_boundary_error);
  EXPECT_GT(rows.back().l2_boundary_error, 0.0);
}

TEST(BoundaryError, RequiresConstantRealMedium) {
  EXPECT_THROW(boundary_eigenfunction_error(constant_config({2.0, 1.0}), {10}), ConfigError);
  RunConfig c;
  c.medium = disk_inclusion(0.5, 2.0);
  EXPECT_THROW(boundary_eigenfunction_error(c, {10}), ConfigError);
}

TEST(Validate, DefaultConfigPasses) {
  const auto report = validate(RunConfig{});
  for (const auto& c : report.checks) EXPECT_NE(c.status, CheckStatus::fail) << c.name << ": " << c.detail;
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.failures(), 0U);
  for (const char* name : {"wronskian", "root_residual", "orthonormality", "boundary_rank", "symmetry", "interior_resonance",
                           "residuals", "boundary_normalization", "eigenvalue_count", "real_medium_realness",
                           "monotonicity", "block_decoupling", "determinism"}) {
    EXPECT_NE(find_check(report, name), nullptr) << name;
  }
}

TEST(Validate, NearResonantWavenumberWarns) {
  RunConfig c = constant_config(1.0);
  c.wavenumber = 3.831706;
  const auto report = validate(c);
  const auto* check = find_check(report, "interior_resonance");
  ASSERT_NE(check, nullptr);
  EXPECT_EQ(check->status, CheckStatus::warn) << check->detail;
}

TEST(Validate, StatusNames) {
  EXPECT_EQ(to_string(CheckStatus::pass), "PASS");
  EXPECT_EQ(to_string(CheckStatus::warn), "WARN");
  EXPECT_EQ(to_string(CheckStatus::fail), "FAIL");
}
