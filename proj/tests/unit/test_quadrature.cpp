#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "steklov/error.hpp"
#include "steklov/quadrature.hpp"

using namespace steklov;

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (int n : {4, 12, 64}) {
    const auto g = gauss_legendre(n);
    ASSERT_EQ(g.nodes.size(), static_cast<std::size_t>(n));
    for (double w : g.weights) EXPECT_GT(w, 0.0);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += g.weights[i] * std::pow(g.nodes[i], d);
      const double exact = d % 2 == 0 ? 2.0 / (d + 1) : 0.0;
      EXPECT_NEAR(sum, exact, 1e-14) << "n=" << n << " d=" << d;
    }
  }
}

TEST(GaussLegendre, SymmetricAscendingNodes) {
  const auto g = gauss_legendre(17);
  for (std::size_t i = 1; i < g.nodes.size(); ++i) EXPECT_LT(g.nodes[i - 1], g.nodes[i]);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) EXPECT_NEAR(g.nodes[i], -g.nodes[g.nodes.size() - 1 - i], 1e-15);
}

TEST(MapToInterval, ScalesWeights) {
  const auto g = map_to_interval(gauss_legendre(8), 0.5, 1.0);
  EXPECT_NEAR(std::accumulate(g.weights.begin(), g.weights.end(), 0.0), 0.5, 1e-15);
  for (double x : g.nodes) {
    EXPECT_GT(x, 0.5);
    EXPECT_LT(x, 1.0);
  }
}

TEST(AngularPoints, TrapezoidIsUniform) {
  const auto t = angular_points(AngularRule::trapezoid, 64);
  ASSERT_EQ(t.nodes.size(), 64U);
  EXPECT_EQ(t.nodes[0], 0.0);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    EXPECT_NEAR(t.nodes[i], 2.0 * std::numbers::pi * static_cast<double>(i) / 64.0, 1e-15);
    EXPECT_NEAR(t.weights[i], 2.0 * std::numbers::pi / 64.0, 1e-16);
  }
}

TEST(AngularPoints, GaussCoversPeriod) {
  const auto t = angular_points(AngularRule::gauss_legendre, 12);
  EXPECT_NEAR(std::accumulate(t.weights.begin(), t.weights.end(), 0.0), 2.0 * std::numbers::pi, 1e-14);
  EXPECT_GT(t.nodes.front(), 0.0);
  EXPECT_LT(t.nodes.back(), 2.0 * std::numbers::pi);
}

TEST(QuadratureRule, Validation) {
  EXPECT_NO_THROW(QuadratureRule{}.validate());
  EXPECT_NO_THROW(QuadratureRule::tensor_gauss(12).validate());
  QuadratureRule q;
  q.radial_points = 15;
  EXPECT_THROW(q.validate(), ConfigError);
  q = {};
  q.angular_points = 63;
  EXPECT_THROW(q.validate(), ConfigError);
  q = QuadratureRule::tensor_gauss(3);
  EXPECT_THROW(q.validate(), ConfigError);
  EXPECT_EQ(QuadratureRule::tensor_gauss(12).angular_rule, AngularRule::gauss_legendre);
  EXPECT_FALSE(QuadratureRule::tensor_gauss(12).split_at_interface);
}

TEST(QuadratureRule, RuleNamesRoundTrip) {
  for (auto rule : {AngularRule::trapezoid, AngularRule::gauss_legendre}) {
    EXPECT_EQ(parse_angular_rule(to_string(rule)), rule);
  }
  EXPECT_THROW(parse_angular_rule("simpson"), ConfigError);
}
