#include "steklov/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

std::string_view to_string(AngularRule rule) {
  return rule == AngularRule::trapezoid ? "trapezoid" : "gauss_legendre";
}

AngularRule parse_angular_rule(std::string_view text) {
  if (text == "trapezoid") return AngularRule::trapezoid;
  if (text == "gauss_legendre") return AngularRule::gauss_legendre;
  throw ConfigError("unknown angular rule '" + std::string(text) + "'");
}

void QuadratureRule::validate() const {
  if (angular_rule == AngularRule::trapezoid) {
    if (radial_points < 16 || angular_points < 64) {
      throw ConfigError("trapezoid quadrature requires radial_points >= 16 and angular_points >= 64");
    }
  } else if (radial_points < 4 || angular_points < 4) {
    throw ConfigError("Gauss quadrature requires at least 4 points per direction");
  }
  if (radial_points > 1024 || angular_points > 8192) {
    throw ConfigError("quadrature point counts too large");
  }
}

QuadratureRule QuadratureRule::tensor_gauss(int points) {
  return QuadratureRule{points, points, AngularRule::gauss_legendre, false};
}

QuadraturePoints gauss_legendre(int n) {
  QuadraturePoints rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      derivative = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    derivative = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

QuadraturePoints map_to_interval(const QuadraturePoints& ref, double a, double b) {
  QuadraturePoints out;
  out.nodes.reserve(ref.nodes.size());
  out.weights.reserve(ref.weights.size());
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
    out.nodes.push_back(mid + half * ref.nodes[i]);
    out.weights.push_back(half * ref.weights[i]);
  }
  return out;
}

QuadraturePoints angular_points(AngularRule rule, int n) {
  if (rule == AngularRule::gauss_legendre) {
    return map_to_interval(gauss_legendre(n), 0.0, 2.0 * std::numbers::pi);
  }
  QuadraturePoints out;
  const double h = 2.0 * std::numbers::pi / n;
  for (int i = 0; i < n; ++i) {
    out.nodes.push_back(i * h);
    out.weights.push_back(h);
  }
  return out;
}

}  // namespace steklov
