#include "steklov/medium.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>

#include "steklov/error.hpp"

namespace steklov {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double eval_rho(const Expr& rho, double theta) {
  const auto value = rho.eval(EvalPoint::polar(0.0, theta));
  if (value.imag() != 0.0) {
    throw ConfigError(fmt::format("inclusion boundary is complex at theta={}", theta));
  }
  return value.real();
}

}  // namespace

std::optional<std::complex<double>> MediumProfile::uniform_value() const {
  if (const auto* c = std::get_if<ConstantMedium>(&value_)) return c->value;
  if (const auto* e = std::get_if<ExpressionMedium>(&value_)) {
    if (e->expr.is_constant()) return e->expr.eval({});
  }
  return std::nullopt;
}

std::optional<double> MediumProfile::interface_radius(double theta) const {
  if (const auto* d = std::get_if<DiskInclusion>(&value_)) return d->radius;
  if (const auto* p = std::get_if<PolarInclusion>(&value_)) return eval_rho(p->rho, theta);
  return std::nullopt;
}

MediumProfile constant_medium(std::complex<double> n) { return ConstantMedium{n}; }

MediumProfile disk_inclusion(double radius, std::complex<double> inner, std::complex<double> outer) {
  return DiskInclusion{radius, Expr::constant(inner), Expr::constant(outer)};
}

MediumProfile polar_inclusion(std::string_view rho, std::complex<double> inner, std::complex<double> outer) {
  return PolarInclusion{parse_expression(rho, {.allow_rational_powers = true}), Expr::constant(inner),
                        Expr::constant(outer)};
}

MediumProfile expression_medium(std::string_view expr) { return ExpressionMedium{parse_expression(expr)}; }

std::complex<double> eval_medium_region(const MediumProfile& profile, bool inside, double r, double theta) {
  const auto at = EvalPoint::polar(r, theta);
  return std::visit(Overloaded{
                        [](const ConstantMedium& c) { return c.value; },
                        [&](const DiskInclusion& d) { return (inside ? d.inner : d.outer).eval(at); },
                        [&](const PolarInclusion& p) { return (inside ? p.inner : p.outer).eval(at); },
                        [&](const ExpressionMedium& e) { return e.expr.eval(at); },
                    },
                    profile.value());
}

std::complex<double> eval_medium(const MediumProfile& profile, double r, double theta) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError(fmt::format("medium evaluation radius {} outside [0, 1]", r));
  }
  bool inside = true;
  if (const auto boundary = profile.interface_radius(theta)) inside = r <= *boundary;
  return eval_medium_region(profile, inside, r, theta);
}

double inclusion_area(const MediumProfile& profile) {
  constexpr int kNodes = 512;
  const auto trapezoid = [&](auto&& radius_at) {
    double sum = 0.0;
    for (int i = 0; i < kNodes; ++i) {
      const double rho = radius_at(2.0 * std::numbers::pi * i / kNodes);
      sum += rho * rho;
    }
    return 0.5 * sum * (2.0 * std::numbers::pi / kNodes);
  };
  return std::visit(
      Overloaded{
          [](const ConstantMedium&) { return std::numbers::pi; },
          [&](const DiskInclusion& d) { return trapezoid([&](double) { return d.radius; }); },
          [&](const PolarInclusion& p) { return trapezoid([&](double t) { return eval_rho(p.rho, t); }); },
          [](const ExpressionMedium&) -> double {
            throw UnsupportedError("inclusion area is undefined for an expression medium");
          },
      },
      profile.value());
}

void check_admissible(std::complex<double> n, double r, double theta) {
  if (!(n.real() > 0.0) || n.imag() < 0.0) {
    throw ConfigError(fmt::format("refractive index {}{:+}i at (r={}, theta={}) violates Re(n) > 0, Im(n) >= 0",
                                  n.real(), n.imag(), r, theta));
  }
}

}  // namespace steklov
