#include "steklov/oracles.hpp"

#include <fmt/format.h>

#include <cmath>
#include <utility>

#include "steklov/error.hpp"
#include "steklov/specfun.hpp"

namespace steklov {
namespace {

constexpr double kPoleFloor = 1e-12;

void require_wavenumber(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError(fmt::format("wavenumber must be positive, got {}", k));
}

}  // namespace

std::complex<double> sov_eigenvalue(double k, std::complex<double> n, int m) {
  require_wavenumber(k);
  if (m < 0) throw DomainError(fmt::format("order must be non-negative, got {}", m));
  const std::complex<double> z = k * std::sqrt(n);
  const auto j = specfun::bessel_j(m, z);
  if (std::abs(j) <= kPoleFloor) {
    throw PoleError(fmt::format("J_{}(k sqrt(n)) vanishes at k sqrt(n) = {}{:+}i", m, z.real(), z.imag()));
  }
  return -z * specfun::bessel_j_prime(m, z) / j;
}

SovFirst sov_first(double k, std::complex<double> n, int m_max) {
  if (m_max < 0) throw DomainError("m_max must be non-negative");
  SovFirst best;
  bool found = false;
  for (int m = 0; m <= m_max; ++m) {
    std::complex<double> value;
    try {
      value = sov_eigenvalue(k, n, m);
    } catch (const PoleError&) {
      best.skipped.push_back(m);
      continue;
    }
    if (!found || value.real() > best.lambda.real()) {
      best.lambda = value;
      best.order = m;
      found = true;
    }
  }
  if (!found) throw PoleError(fmt::format("every order 0..{} is at a pole", m_max));
  return best;
}

double asym_first(double k, double n1, double rho) {
  require_wavenumber(k);
  const double j0 = specfun::bessel_j(0, k);
  if (std::abs(j0) <= kPoleFloor) throw PoleError(fmt::format("J_0(k) vanishes at k = {}", k));
  const double kr = k * rho;
  return -k * specfun::bessel_j_prime(0, k) / j0 + 0.5 * n1 * (2.0 + n1) * kr * kr;
}

double annulus_exact(double k, double n_in, double rho, int m) {
  require_wavenumber(k);
  if (!(n_in > 0.0)) throw DomainError(fmt::format("inner index must be positive, got {}", n_in));
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError(fmt::format("inclusion radius {} outside (0, 1)", rho));
  if (m < 0) throw DomainError(fmt::format("order must be non-negative, got {}", m));

  const double a = k * std::sqrt(n_in);
  const double kr = k * rho;
  // Interface conditions: [J  Y; kJ'  kY'] [alpha; beta] = [w_in; w_in'].
  double M[2][2] = {{specfun::bessel_j(m, kr), specfun::bessel_y(m, kr)},
                    {k * specfun::bessel_j_prime(m, kr), k * specfun::bessel_y_prime(m, kr)}};
  double rhs[2] = {specfun::bessel_j(m, a * rho), a * specfun::bessel_j_prime(m, a * rho)};

  // Row scaling for a meaningful singularity test, then partial pivoting.
  for (int row = 0; row < 2; ++row) {
    const double scale = std::max(std::abs(M[row][0]), std::abs(M[row][1]));
    if (scale == 0.0) throw ResonanceError("interface matching system has a zero row");
    M[row][0] /= scale;
    M[row][1] /= scale;
    rhs[row] /= scale;
  }
  if (std::abs(M[1][0]) > std::abs(M[0][0])) {
    std::swap(M[0], M[1]);
    std::swap(rhs[0], rhs[1]);
  }
  if (std::abs(M[0][0]) < 1e-14) throw ResonanceError("interface matching system is singular");
  const double factor = M[1][0] / M[0][0];
  const double pivot = M[1][1] - factor * M[0][1];
  if (std::abs(pivot) < 1e-14) throw ResonanceError("interface matching system is singular");
  const double beta = (rhs[1] - factor * rhs[0]) / pivot;
  const double alpha = (rhs[0] - M[0][1] * beta) / M[0][0];

  const double w1 = alpha * specfun::bessel_j(m, k) + beta * specfun::bessel_y(m, k);
  const double dw1 = k * (alpha * specfun::bessel_j_prime(m, k) + beta * specfun::bessel_y_prime(m, k));
  const double scale = std::abs(alpha * specfun::bessel_j(m, k)) + std::abs(beta * specfun::bessel_y(m, k));
  if (std::abs(w1) <= kPoleFloor * std::max(1.0, scale)) {
    throw PoleError(fmt::format("layered solution vanishes on the boundary (k={}, rho={})", k, rho));
  }
  return -dw1 / w1;
}

}  // namespace steklov
