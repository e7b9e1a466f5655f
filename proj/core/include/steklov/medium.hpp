#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>

#include "steklov/expr.hpp"

namespace steklov {

/// n(x) = value on all of D.
struct ConstantMedium {
  std::complex<double> value{1.0, 0.0};
};

/// n = inner for r <= radius, outer otherwise. Inner and outer are
/// expressions so variable profiles can be restricted to an inclusion.
struct DiskInclusion {
  double radius = 0.5;
  Expr inner = Expr::constant(2.0);
  Expr outer = Expr::constant(1.0);
};

/// Star-shaped inclusion r <= rho(theta), with 0 < rho < 1.
struct PolarInclusion {
  Expr rho;
  Expr inner = Expr::constant(2.0);
  Expr outer = Expr::constant(1.0);
};

/// n given by an expression over r, theta, x, y on all of D.
struct ExpressionMedium {
  Expr expr;
};

/// Refractive index n(r, theta) on the unit disk.
class MediumProfile {
 public:
  using Variant = std::variant<ConstantMedium, DiskInclusion, PolarInclusion, ExpressionMedium>;

  MediumProfile() = default;
  MediumProfile(ConstantMedium m) : value_(std::move(m)) {}
  MediumProfile(DiskInclusion m) : value_(std::move(m)) {}
  MediumProfile(PolarInclusion m) : value_(std::move(m)) {}
  MediumProfile(ExpressionMedium m) : value_(std::move(m)) {}

  const Variant& value() const { return value_; }
  bool is_constant() const { return std::holds_alternative<ConstantMedium>(value_); }
  bool is_inclusion() const {
    return std::holds_alternative<DiskInclusion>(value_) || std::holds_alternative<PolarInclusion>(value_);
  }

  /// Constant value when the medium is uniform on D (ConstantMedium, or an
  /// expression without variables).
  std::optional<std::complex<double>> uniform_value() const;

  /// Inclusion boundary radius at theta; empty for media without an inclusion.
  std::optional<double> interface_radius(double theta) const;

 private:
  Variant value_;
};

/// Convenience constructors for common profiles.
MediumProfile constant_medium(std::complex<double> n);
MediumProfile disk_inclusion(double radius, std::complex<double> inner, std::complex<double> outer = 1.0);
/// Parses `rho` with rational powers enabled.
MediumProfile polar_inclusion(std::string_view rho, std::complex<double> inner,
                              std::complex<double> outer = 1.0);
MediumProfile expression_medium(std::string_view expr);

/// n(r, theta). Inclusions use the closed rule: inner when r <= rho(theta).
/// Throws DomainError for r outside [0, 1] and EvaluationError (with the
/// sample location) when an expression cannot be evaluated.
std::complex<double> eval_medium(const MediumProfile& profile, double r, double theta);

/// Evaluates the inner or outer region explicitly, for quadrature that has
/// already split the radial interval at the interface.
std::complex<double> eval_medium_region(const MediumProfile& profile, bool inside, double r, double theta);

/// |Omega|: pi for ConstantMedium (Omega = D), otherwise
/// (1/2) int_0^{2pi} rho(theta)^2 by the 512-node periodic trapezoid rule.
/// Throws UnsupportedError for ExpressionMedium.
double inclusion_area(const MediumProfile& profile);

/// Checks Re(n) > 0 and Im(n) >= 0 at one sample; throws ConfigError otherwise.
void check_admissible(std::complex<double> n, double r, double theta);

}  // namespace steklov
