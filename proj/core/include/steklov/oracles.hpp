#pragma once

#include <complex>
#include <vector>

namespace steklov {

/// Steklov eigenvalue of angular order m for constant n on the unit disk:
/// lambda = -k sqrt(n) J'_m(k sqrt(n)) / J_m(k sqrt(n)), principal root.
/// Throws PoleError when |J_m(k sqrt(n))| <= 1e-12.
std::complex<double> sov_eigenvalue(double k, std::complex<double> n, int m);

struct SovFirst {
  std::complex<double> lambda;
  int order = 0;
  std::vector<int> skipped;  // orders whose formula hit a pole
};

/// Eigenvalue of largest real part over m in [0, m_max]. Orders at a pole
/// are skipped and reported; throws PoleError if every order fails.
SovFirst sov_first(double k, std::complex<double> n, int m_max = 10);

/// Two-term small-inclusion expansion for a disk of radius rho with
/// n = (1 + n1)^2 inside: -k J'_0(k)/J_0(k) + n1 (2 + n1) (k rho)^2 / 2.
double asym_first(double k, double n1, double rho);

/// Exact eigenvalue of order m for n = n_in on r <= rho and 1 outside,
/// by matching J_m(k sqrt(n_in) r) to alpha J_m(k r) + beta Y_m(k r) at rho.
/// Throws ResonanceError for a singular matching system and PoleError when
/// w(1) vanishes.
double annulus_exact(double k, double n_in, double rho, int m);

}  // namespace steklov
