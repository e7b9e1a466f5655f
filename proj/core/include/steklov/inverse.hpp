#pragma once

#include <optional>

#include "steklov/medium.hpp"

namespace steklov {

struct Bracket {
  double lo = 1.0001;
  double hi = 25.0;
};

struct ConstantEstimate {
  double n_approx = 0.0;
  int iterations = 0;
  double residual = 0.0;  // |lambda_0(k, n_approx) - target|
};

struct EstimationResult {
  double lambda_target = 0.0;
  double n_approx = 0.0;
  std::optional<double> n_approx2;  // present when a geometry was supplied
  int iterations = 0;
  double residual = 0.0;
};

/// Real constant index whose m = 0 separation-of-variables eigenvalue equals
/// `lambda_target`. The bracket is split at the poles n = (j_{0,s}/k)^2 and
/// the first sub-bracket with a sign change is solved by bisection to width
/// 1e-6 followed by a safeguarded secant iteration to |g| <= 1e-10. A
/// positive target below the lowest branch's value at bracket.lo expands
/// that sub-bracket downwards (lambda_0 -> 0 as n -> 0), so the result may
/// lie below bracket.lo.
/// Throws BracketError when no sub-bracket changes sign.
ConstantEstimate estimate_constant(double lambda_target, double k, const Bracket& bracket = {});

/// Redistributes a constant estimate over the inclusion:
/// (n_approx |D| - (|D| - |Omega|)) / |Omega|. Returns n_approx unchanged
/// when |Omega| = |D|. Throws DomainError for non-positive areas or
/// |Omega| > |D|.
double area_correction(double n_approx, double area_D, double area_Omega);

/// estimate_constant followed by area_correction with |D| = pi and |Omega|
/// from inclusion_area(geometry). Without a geometry, n_approx2 is empty.
EstimationResult estimate_two_step(double lambda_target, double k, const std::optional<MediumProfile>& geometry,
                                   const Bracket& bracket = {});

}  // namespace steklov
