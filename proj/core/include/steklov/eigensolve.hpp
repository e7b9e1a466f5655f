#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "steklov/assembly.hpp"

namespace steklov {

struct EigenPair {
  std::complex<double> lambda;
  Eigen::VectorXcd coeffs;  // c^H B c = 1, largest-modulus entry real positive
  double residual = 0.0;    // ||(A + lambda B) c|| / ||c||
};

/// Finite Steklov eigenvalues of a Galerkin pencil, sorted by descending
/// real part (ties: descending imaginary part).
struct SteklovSpectrum {
  std::vector<EigenPair> pairs;
  double condition = 0.0;  // 1-norm condition estimate of A

  std::size_t size() const { return pairs.size(); }
  const EigenPair& operator[](std::size_t i) const { return pairs[i]; }
};

/// Largest condition estimate of A accepted by solve_spectrum.
inline constexpr double kMaxCondition = 1e12;

/// Reciprocal-condition based estimate of cond_1(A).
double condition_estimate(const Eigen::MatrixXcd& A);

/// Solves (A + lambda B) c = 0 through the eigenvalues tau of M = A^{-1} B:
/// eigenvalues with |tau| > tau_tol * max|tau| give lambda = -1/tau.
/// Throws SingularSystemError when A is numerically singular (the
/// wavenumber is close to an interior eigenvalue) and NumericalError when
/// the eigensolver fails.
SteklovSpectrum solve_spectrum(const GalerkinSystem& sys, double tau_tol = 1e-10);

/// ||(A + lambda B) c||_2 / ||c||_2.
double convergence_residual(const GalerkinSystem& sys, const EigenPair& pair);
double convergence_residual(const GalerkinSystem& sys, std::complex<double> lambda, const Eigen::VectorXcd& c);

/// w_N = sum_j c_j phi_j at a point of the closed unit disk.
std::complex<double> eval_eigenfunction(const BasisSet& basis, const Eigen::VectorXcd& coeffs, double r, double theta);

struct FieldSample {
  double x = 0.0;
  double y = 0.0;
  std::optional<std::complex<double>> value;  // empty outside the disk
};

struct FieldGrid {
  int grid_size = 0;
  std::vector<FieldSample> samples;  // row-major, y outer, x inner
};

/// Samples eigenfunction `index` (1-based) on a uniform grid over [-1, 1]^2.
/// Throws ConfigError for an out-of-range index or grid_size < 2.
FieldGrid eigenfunction_field(const SteklovSpectrum& spectrum, const BasisSet& basis, int index, int grid_size);

}  // namespace steklov
