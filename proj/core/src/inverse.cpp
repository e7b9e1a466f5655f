#include "steklov/inverse.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "steklov/error.hpp"
#include "steklov/oracles.hpp"
#include "steklov/specfun.hpp"

namespace steklov {
namespace {

constexpr double kBisectionWidth = 1e-6;
constexpr double kResidualTol = 1e-10;
constexpr double kPoleGap = 1e-9;  // relative offset of sub-bracket ends from a pole
constexpr double kLowestIndex = 1e-12;

double branch_value(double k, double n) { return sov_eigenvalue(k, n, 0).real(); }

struct Solve {
  double root;
  int iterations;
  double residual;
};

Solve solve_branch(double k, double target, double lo, double hi, double g_lo, double g_hi) {
  int iterations = 0;
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    const double g = branch_value(k, mid) - target;
    ++iterations;
    if (g == 0.0) return {mid, iterations, 0.0};
    if ((g < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g;
    } else {
      hi = mid;
      g_hi = g;
    }
  }
  // Secant from the bracket ends; fall back to bisection whenever the step
  // leaves the bracket.
  double x = std::abs(g_lo) < std::abs(g_hi) ? lo : hi;
  double gx = x == lo ? g_lo : g_hi;
  for (int step = 0; step < 200 && std::abs(gx) > kResidualTol; ++step) {
    double next = hi - g_hi * (hi - lo) / (g_hi - g_lo);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double g = branch_value(k, next) - target;
    ++iterations;
    if ((g < 0.0) == (g_lo < 0.0)) {
      lo = next;
      g_lo = g;
    } else {
      hi = next;
      g_hi = g;
    }
    x = next;
    gx = g;
    if (hi - lo < 1e-15 * hi) break;
  }
  return {x, iterations, std::abs(gx)};
}

}  // namespace

ConstantEstimate estimate_constant(double lambda_target, double k, const Bracket& bracket) {
  if (!std::isfinite(lambda_target)) throw DomainError("target eigenvalue must be finite");
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError(fmt::format("wavenumber must be positive, got {}", k));
  if (!(bracket.lo > 0.0 && bracket.hi > bracket.lo)) {
    throw DomainError(fmt::format("invalid bracket [{}, {}]", bracket.lo, bracket.hi));
  }
  // Poles of the m = 0 branch: k sqrt(n) = j_{0,s}.
  std::vector<double> edges{bracket.lo};
  const double z_hi = k * std::sqrt(bracket.hi);
  if (z_hi > specfun::kMaxArgument) throw DomainError("bracket exceeds the supported Bessel argument range");
  int count = 1;
  for (;; ++count) {
    const auto zeros = specfun::j_zeros(0, count);
    if (zeros.back() >= z_hi) break;
  }
  for (const double z : specfun::j_zeros(0, count)) {
    const double pole = (z / k) * (z / k);
    if (pole <= bracket.lo || pole >= bracket.hi) continue;
    edges.push_back(pole * (1.0 - kPoleGap));
    edges.push_back(pole * (1.0 + kPoleGap));
  }
  edges.push_back(bracket.hi);

  for (std::size_t s = 0; s + 1 < edges.size(); s += 2) {
    double lo = edges[s];
    const double hi = edges[s + 1];
    double g_lo = branch_value(k, lo) - lambda_target;
    const double g_hi = branch_value(k, hi) - lambda_target;
    // On the lowest branch lambda_0 decreases to 0 as n -> 0, so a positive
    // target just below the bracket (e.g. the background medium n = 1 with
    // the default lower end 1.0001) is reached by expanding downwards.
    if (s == 0 && g_lo > 0.0 && lambda_target > 0.0) {
      while (g_lo > 0.0 && lo > kLowestIndex) {
        lo = std::max(0.5 * lo, kLowestIndex);
        g_lo = branch_value(k, lo) - lambda_target;
      }
    }
    if (std::abs(g_lo) <= kResidualTol) return {lo, 0, std::abs(g_lo)};
    if (std::abs(g_hi) <= kResidualTol) return {hi, 0, std::abs(g_hi)};
    if ((g_lo < 0.0) == (g_hi < 0.0)) continue;
    const auto solved = solve_branch(k, lambda_target, lo, hi, g_lo, g_hi);
    return {solved.root, solved.iterations, solved.residual};
  }
  throw BracketError(fmt::format("no refractive index in [{}, {}] reproduces lambda = {} at k = {}", bracket.lo,
                                 bracket.hi, lambda_target, k));
}

double area_correction(double n_approx, double area_D, double area_Omega) {
  if (!(area_D > 0.0)) throw DomainError(fmt::format("domain area must be positive, got {}", area_D));
  if (!(area_Omega > 0.0)) throw DomainError(fmt::format("inclusion area must be positive, got {}", area_Omega));
  if (area_Omega > area_D) throw DomainError("inclusion area exceeds the domain area");
  if (area_Omega == area_D) return n_approx;
  return (n_approx * area_D - (area_D - area_Omega)) / area_Omega;
}

EstimationResult estimate_two_step(double lambda_target, double k, const std::optional<MediumProfile>& geometry,
                                   const Bracket& bracket) {
  const auto estimate = estimate_constant(lambda_target, k, bracket);
  EstimationResult result;
  result.lambda_target = lambda_target;
  result.n_approx = estimate.n_approx;
  result.iterations = estimate.iterations;
  result.residual = estimate.residual;
  if (geometry) {
    result.n_approx2 = area_correction(estimate.n_approx, std::numbers::pi, inclusion_area(*geometry));
  }
  return result;
}

}  // namespace steklov
