#pragma once

#include <string_view>
#include <vector>

namespace steklov {

enum class AngularRule { trapezoid, gauss_legendre };

std::string_view to_string(AngularRule rule);
AngularRule parse_angular_rule(std::string_view text);

/// Polar tensor-product rule on the unit disk.
///
/// The default (Gauss-Legendre radial segments split at the inclusion
/// interface, periodic trapezoid in theta) converges spectrally for
/// piecewise-smooth media. The unsplit 12 x 12 Gauss-Legendre rule returned
/// by tensor_gauss(12) integrates across the interface and so carries an
/// O(1e-2) quadrature error for inclusions; it is kept to reproduce
/// reference eigenvalues computed that way.
struct QuadratureRule {
  int radial_points = 64;    // per radial segment
  int angular_points = 256;
  AngularRule angular_rule = AngularRule::trapezoid;
  bool split_at_interface = true;

  /// Throws ConfigError unless radial_points >= 16 and angular_points >= 64
  /// for the trapezoid rule, or both >= 4 for the Gauss angular rule.
  void validate() const;

  static QuadratureRule tensor_gauss(int points);

  friend bool operator==(const QuadratureRule&, const QuadratureRule&) = default;
};

/// Nodes and positive weights on [a, b].
struct QuadraturePoints {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadraturePoints gauss_legendre(int n);
/// Affine map of a [-1, 1] rule onto [a, b].
QuadraturePoints map_to_interval(const QuadraturePoints& ref, double a, double b);
/// Angular nodes on [0, 2pi) for the given rule.
QuadraturePoints angular_points(AngularRule rule, int n);

}  // namespace steklov
