#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "steklov/error.hpp"
#include "steklov/inverse.hpp"
#include "steklov/oracles.hpp"

using namespace steklov;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(EstimateConstant, RoundTripExamples) {
  EXPECT_NEAR(estimate_constant(1.3771053, 1.0).n_approx, 2.0, 1e-5);
  EXPECT_NEAR(estimate_constant(0.575080915, 1.0).n_approx, 1.0, 1e-6);
  EXPECT_NEAR(estimate_constant(1.3007182, 1.0).n_approx, 1.920193, 1e-4);
}

TEST(EstimateConstant, ForwardInverseConsistency) {
  for (double n : {1.5, 2.0, 3.0}) {
    const double lambda = sov_first(1.0, n).lambda.real();
    const auto est = estimate_constant(lambda, 1.0);
    EXPECT_NEAR(est.n_approx, n, 1e-8);
    EXPECT_LE(est.residual, 1e-10);
    EXPECT_NEAR(std::abs(sov_eigenvalue(1.0, est.n_approx, 0).real() - lambda), est.residual, 1e-15);
    EXPECT_GT(est.iterations, 0);
  }
}

TEST(EstimateConstant, BranchIsMonotoneAwayFromPoles) {
  // Lowest branch up to the first pole (j_{0,1})^2 ~ 5.783.
  double previous = -1e300;
  for (int i = 0; i < 100; ++i) {
    const double n = 1.0001 + (5.7 - 1.0001) * i / 99.0;
    const double g = sov_eigenvalue(1.0, n, 0).real();
    EXPECT_GT(g, previous) << n;
    previous = g;
  }
}

TEST(EstimateConstant, PositiveTargetBelowBracketExpandsDownwards) {
  const auto est = estimate_constant(0.1, 1.0, Bracket{1.5, 2.5});
  EXPECT_LT(est.n_approx, 1.0);
  EXPECT_LE(est.residual, 1e-10);
}

TEST(EstimateConstant, NegativeTargetUsesNextBranch) {
  const auto est = estimate_constant(-100.0, 1.0);
  EXPECT_GT(est.n_approx, 5.783);
  EXPECT_LE(est.residual, 1e-10);
}

TEST(EstimateConstant, BracketErrors) {
  Bracket narrow{1.5, 2.5};
  EXPECT_THROW(estimate_constant(5.0, 1.0, narrow), BracketError);
  EXPECT_THROW(estimate_constant(-0.1, 1.0, narrow), BracketError);
  EXPECT_THROW(estimate_constant(25.0, 1.0, Bracket{6.0, 7.0}), BracketError);
  EXPECT_THROW(estimate_constant(1.0, 0.0), DomainError);
  EXPECT_THROW(estimate_constant(1.0, 1.0, Bracket{2.0, 1.0}), DomainError);
}

TEST(AreaCorrection, Examples) {
  EXPECT_NEAR(area_correction(1.5, kPi, kPi / 4), 3.0, 1e-14);
  EXPECT_EQ(area_correction(1.87654321, kPi, kPi), 1.87654321);
  for (double s : {0.5, 3.0, 1e3}) {
    EXPECT_NEAR(area_correction(1.7, s * kPi, s * 0.3 * kPi), area_correction(1.7, kPi, 0.3 * kPi), 1e-13);
  }
}

TEST(AreaCorrection, Errors) {
  EXPECT_THROW(area_correction(1.5, kPi, 0.0), DomainError);
  EXPECT_THROW(area_correction(1.5, kPi, -1.0), DomainError);
  EXPECT_THROW(area_correction(1.5, 0.0, 0.0), DomainError);
  EXPECT_THROW(area_correction(1.5, kPi, 4.0), DomainError);
}

TEST(EstimateTwoStep, FullDiskAndInclusions) {
  const auto full = estimate_two_step(1.3007182, 1.0, constant_medium(2.0));
  ASSERT_TRUE(full.n_approx2.has_value());
  EXPECT_EQ(*full.n_approx2, full.n_approx);
  EXPECT_NEAR(*full.n_approx2, 1.920193, 1e-4);
  EXPECT_EQ(full.lambda_target, 1.3007182);

  const auto half = estimate_two_step(0.78174886356, 1.0, disk_inclusion(0.5, 2.0));
  EXPECT_NEAR(*half.n_approx2, 2.181511, 1e-3);

  const auto square =
      estimate_two_step(1.11759427187, 1.0, polar_inclusion("0.75*(abs(sin(theta))^5+abs(cos(theta))^5)^(-1/5)", 2.0));
  EXPECT_NEAR(*square.n_approx2, 2.053623, 1e-3);

  EXPECT_FALSE(estimate_two_step(1.3007182, 1.0, std::nullopt).n_approx2.has_value());
  EXPECT_THROW(estimate_two_step(1.3, 1.0, expression_medium("2+r")), UnsupportedError);
}
