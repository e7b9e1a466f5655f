#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steklov/config.hpp"

namespace steklov {

/// Unweighted least-squares slope of log(y) against log(x); points with
/// y <= 0 are dropped. Empty when fewer than two points remain.
std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct ConvergenceRow {
  int N = 0;
  std::complex<double> lambda;
  std::optional<double> rel_error;  // when a closed-form eigenvalue exists
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  std::optional<std::complex<double>> exact;
  std::optional<double> slope;  // of |lambda_N - exact| against N
};

/// Leading eigenvalue for each truncation in `n_values` (non-decreasing;
/// repeated N give identical rows).
/// config.basis.truncation is replaced by max(n_values). The pencil is
/// assembled once at the largest N; smaller N use leading sub-pencils, which
/// is exactly the truncated basis under the configured ordering.
ConvergenceTable convergence_study(const RunConfig& config, const std::vector<int>& n_values, int threads = 0);

struct ProjectionRow {
  int N = 0;
  double l2_error = 0.0;
  double h1_error = 0.0;
};

struct ProjectionStudy {
  std::string function_id;
  std::vector<ProjectionRow> rows;
  std::optional<double> l2_slope;
  std::optional<double> h1_slope;
  std::size_t reference_size = 0;
  double tail_fraction = 0.0;  // 1 - ||P_ref f||^2 / ||f||^2
};

/// Inconclusive threshold on the reference-expansion tail.
inline constexpr double kProjectionTailLimit = 1e-8;

/// Projection errors ||(I - P_N) f|| in L2 and the H1 series norm for the
/// sigma-ascending basis, measured against a reference expansion of
/// 4 * max(N) terms. Sine modes double the reference size needed for a given
/// sqrt(sigma) cutoff, so they are opt-in. Test functions: "bump" for
/// f = (1 - r^2)^2, "basis:j" for the j-th reference basis function.
/// Throws NumericalError if the reference tail exceeds kProjectionTailLimit
/// and ConfigError for an unknown function id.
ProjectionStudy projection_rate_study(std::string_view function_id, const std::vector<int>& n_values,
                                      bool include_sin = false, int threads = 0);

struct BoundaryErrorRow {
  int N = 0;
  double l2_boundary_error = 0.0;
};

/// ||w - w_N||_{L2(dD)} for the leading eigenpair of a constant real medium,
/// where w = J_0(k sqrt(n) r) is the exact eigenfunction. Both functions are
/// scaled to unit L2(D) norm and w_N is phase-aligned so that (w, w_N) is
/// real and positive; every term is evaluated in closed form from the
/// coefficients. Throws ConfigError for a non-constant or complex medium.
std::vector<BoundaryErrorRow> boundary_eigenfunction_error(const RunConfig& config, const std::vector<int>& n_values,
                                                           int threads = 0);

enum class CheckStatus { pass, warn, fail };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  std::size_t failures() const;
};

/// Runs the library invariants for the configured basis, wavenumber and
/// quadrature: Bessel Wronskian, root residuals, basis orthonormality,
/// boundary-mass rank, symmetry, residuals and normalization, interior-resonance
/// conditioning (warning above 1e8), realness for real n, monotonicity in
/// n, block decoupling, and run-to-run determinism.
ValidationReport validate(const RunConfig& config, int threads = 0);

std::string_view to_string(CheckStatus status);

}  // namespace steklov
