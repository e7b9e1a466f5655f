#pragma once

#include <complex>
#include <vector>

namespace steklov::specfun {

/// Largest order and argument modulus accepted by the Bessel routines.
///
/// The ascending series is summed in extended precision, falling back to
/// quadruple precision whenever the accumulated term magnitude shows that
/// cancellation would cost more than the accuracy target. At |z| = 50 the
/// largest term is ~1e20, which quadruple precision still resolves to
/// ~1e-14 absolute.
inline constexpr int kMaxOrder = 60;
inline constexpr double kMaxArgument = 50.0;

/// Bessel function of the first kind J_m(z), integer order m >= 0.
std::complex<double> bessel_j(int m, std::complex<double> z);
double bessel_j(int m, double x);

/// Derivative J'_m(z) = J_{m-1}(z) - (m/z) J_m(z), with J'_0 = -J_1. At z = 0
/// the removable singularity is taken from the series (J'_1(0) = 1/2).
std::complex<double> bessel_j_prime(int m, std::complex<double> z);
double bessel_j_prime(int m, double x);

/// Bessel function of the second kind Y_m(x) for 1e-6 <= x <= 50.
double bessel_y(int m, double x);
/// Y'_m(x) = Y_{m-1}(x) - (m/x) Y_m(x), with Y'_0 = -Y_1.
double bessel_y_prime(int m, double x);

/// First `count` non-negative roots of J'_p, ascending.
///
/// For p = 0 the table starts with the root x = 0 (the constant Neumann
/// mode). For p >= 1 the origin is excluded even though J'_p(0) = 0 when
/// p >= 2, since the associated radial function J_p(0 * r) vanishes.
struct BesselRootTable {
  int order = 0;
  std::vector<double> roots;
};

BesselRootTable jprime_zeros(int p, int count);

/// First `count` positive roots of J_p, ascending.
std::vector<double> j_zeros(int p, int count);

/// Every non-negative root of J'_p below `upper` (same 0 convention as
/// jprime_zeros). `upper` must not exceed kMaxArgument.
std::vector<double> jprime_zeros_below(int p, double upper);

}  // namespace steklov::specfun
