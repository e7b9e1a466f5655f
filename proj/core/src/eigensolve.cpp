#include "steklov/eigensolve.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "steklov/error.hpp"

namespace steklov {

double condition_estimate(const Eigen::MatrixXcd& A) {
  if (A.size() == 0) return 0.0;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
  const double rcond = lu.rcond();
  return rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
}

double convergence_residual(const GalerkinSystem& sys, std::complex<double> lambda, const Eigen::VectorXcd& c) {
  const double norm = c.norm();
  if (norm == 0.0) return 0.0;
  const Eigen::VectorXcd r = sys.A * c + lambda * (sys.B.cast<std::complex<double>>() * c);
  return r.norm() / norm;
}

double convergence_residual(const GalerkinSystem& sys, const EigenPair& pair) {
  return convergence_residual(sys, pair.lambda, pair.coeffs);
}

SteklovSpectrum solve_spectrum(const GalerkinSystem& sys, double tau_tol) {
  const auto n = sys.A.rows();
  if (n == 0) throw ConfigError("cannot solve an empty pencil");
  SteklovSpectrum spectrum;
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(sys.A);
  const double rcond = lu.rcond();
  spectrum.condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(spectrum.condition <= kMaxCondition)) {
    throw SingularSystemError(fmt::format(
        "wavenumber k={} is near an interior eigenvalue: condition estimate of A is {:.3e}", sys.k,
        spectrum.condition));
  }
  const Eigen::MatrixXcd Bc = sys.B.cast<std::complex<double>>();
  const Eigen::MatrixXcd M = lu.solve(Bc);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(M, true);
  if (solver.info() != Eigen::Success) throw NumericalError("complex eigensolver did not converge");
  const auto& tau = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();

  double tau_max = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) tau_max = std::max(tau_max, std::abs(tau(i)));
  if (tau_max == 0.0) return spectrum;

  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(std::abs(tau(i)) > tau_tol * tau_max)) continue;
    EigenPair pair;
    pair.lambda = -1.0 / tau(i);
    Eigen::VectorXcd c = vectors.col(i);
    const double bnorm2 = (c.adjoint() * Bc * c)(0).real();
    if (!(bnorm2 > 0.0)) continue;
    c /= std::sqrt(bnorm2);
    Eigen::Index largest = 0;
    c.cwiseAbs().maxCoeff(&largest);
    c *= std::conj(c(largest)) / std::abs(c(largest));
    c(largest) = std::abs(c(largest));
    pair.coeffs = std::move(c);
    pair.residual = convergence_residual(sys, pair);
    spectrum.pairs.push_back(std::move(pair));
  }
  std::stable_sort(spectrum.pairs.begin(), spectrum.pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() > b.lambda.real();
    return a.lambda.imag() > b.lambda.imag();
  });
  return spectrum;
}

std::complex<double> eval_eigenfunction(const BasisSet& basis, const Eigen::VectorXcd& coeffs, double r,
                                        double theta) {
  if (static_cast<std::size_t>(coeffs.size()) != basis.size()) {
    throw ConfigError("coefficient vector does not match the basis size");
  }
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < basis.size(); ++j) sum += coeffs(static_cast<Eigen::Index>(j)) * eval_basis(basis[j], r, theta);
  return sum;
}

FieldGrid eigenfunction_field(const SteklovSpectrum& spectrum, const BasisSet& basis, int index, int grid_size) {
  if (index < 1 || static_cast<std::size_t>(index) > spectrum.size()) {
    throw ConfigError(fmt::format("eigenfunction index {} outside [1, {}]", index, spectrum.size()));
  }
  if (grid_size < 2 || grid_size > 4096) throw ConfigError(fmt::format("grid size {} outside [2, 4096]", grid_size));
  const auto& c = spectrum[static_cast<std::size_t>(index - 1)].coeffs;
  FieldGrid grid;
  grid.grid_size = grid_size;
  grid.samples.reserve(static_cast<std::size_t>(grid_size) * static_cast<std::size_t>(grid_size));
  const double h = 2.0 / (grid_size - 1);
  for (int iy = 0; iy < grid_size; ++iy) {
    const double y = -1.0 + iy * h;
    for (int ix = 0; ix < grid_size; ++ix) {
      const double x = -1.0 + ix * h;
      FieldSample s{x, y, std::nullopt};
      const double r = std::hypot(x, y);
      if (r <= 1.0 + 1e-12) s.value = eval_eigenfunction(basis, c, std::min(r, 1.0), std::atan2(y, x));
      grid.samples.push_back(s);
    }
  }
  return grid;
}

}  // namespace steklov
