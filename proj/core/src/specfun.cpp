#include "steklov/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "steklov/error.hpp"

namespace steklov::specfun {
namespace {

using Quad = __float128;
using Extended = long double;

constexpr int kMaxTerms = 256;
constexpr Extended kExtendedEps = 1.0842021724855044e-19L;  // 2^-63
constexpr double kRelativeTarget = 1e-14;
constexpr double kAbsoluteFloor = 1e-17;

template <class T>
T abs_value(T v) {
  return v < T(0) ? -v : v;
}

// 1 / (k (k + m)) for the series recurrence; integer division in software
// quadruple precision is the dominant cost otherwise.
template <class T>
const std::array<T, kMaxTerms>& recurrence_factors(int m) {
  struct Table {
    std::array<std::array<T, kMaxTerms>, kMaxOrder + 2> rows{};
    Table() {
      for (int order = 0; order <= kMaxOrder + 1; ++order) {
        rows[order][0] = T(0);
        for (int k = 1; k < kMaxTerms; ++k) {
          rows[order][k] = T(1) / T(static_cast<long long>(k) * (k + order));
        }
      }
    }
  };
  static const Table table;
  return table.rows[m];
}

template <class T>
struct RealSeries {
  T sum{};
  T magnitude{};  // sum of |terms|, bounds the cancellation error
  int terms = 0;
};

template <class T>
struct ComplexValue {
  T re{};
  T im{};
};

template <class T>
struct ComplexSeries {
  ComplexValue<T> sum{};
  T magnitude{};
  int terms = 0;
};

// J_m(x) = (x/2)^m sum_k (-x^2/4)^k / (k! (k+m)!)
template <class T>
RealSeries<T> j_series(int m, T x) {
  const T half = x / T(2);
  T term = T(1);
  for (int i = 1; i <= m; ++i) term = term * half / T(i);
  const T w = -half * half;
  const auto& factors = recurrence_factors<T>(m);
  RealSeries<T> s;
  s.sum = term;
  s.magnitude = abs_value(term);
  const double peak = 0.5 * std::abs(static_cast<double>(x)) + 1.0;
  const T eps = std::is_same_v<T, Quad> ? T(1e-36) : T(1e-22);
  int k = 1;
  for (; k < kMaxTerms; ++k) {
    term = term * w * factors[k];
    s.sum += term;
    s.magnitude += abs_value(term);
    if (k > peak && abs_value(term) <= eps * s.magnitude) break;
  }
  s.terms = k;
  return s;
}

template <class T>
ComplexSeries<T> j_series(int m, ComplexValue<T> z) {
  const ComplexValue<T> half{z.re / T(2), z.im / T(2)};
  ComplexValue<T> term{T(1), T(0)};
  for (int i = 1; i <= m; ++i) {
    const T re = (term.re * half.re - term.im * half.im) / T(i);
    const T im = (term.re * half.im + term.im * half.re) / T(i);
    term = {re, im};
  }
  const ComplexValue<T> w{-(half.re * half.re - half.im * half.im),
                          -(T(2) * half.re * half.im)};
  const auto& factors = recurrence_factors<T>(m);
  ComplexSeries<T> s;
  s.sum = term;
  s.magnitude = abs_value(term.re) + abs_value(term.im);
  const double modulus = std::hypot(static_cast<double>(z.re), static_cast<double>(z.im));
  const double peak = 0.5 * modulus + 1.0;
  const T eps = std::is_same_v<T, Quad> ? T(1e-36) : T(1e-22);
  int k = 1;
  for (; k < kMaxTerms; ++k) {
    const T re = (term.re * w.re - term.im * w.im) * factors[k];
    const T im = (term.re * w.im + term.im * w.re) * factors[k];
    term = {re, im};
    s.sum.re += term.re;
    s.sum.im += term.im;
    const T size = abs_value(term.re) + abs_value(term.im);
    s.magnitude += size;
    if (k > peak && size <= eps * s.magnitude) break;
  }
  s.terms = k;
  return s;
}

// Rounding error of an extended-precision sum, with a margin for the
// per-term error growth of the recurrence.
double extended_error(Extended magnitude, int terms) {
  return static_cast<double>(magnitude * kExtendedEps) * (4.0 + terms);
}

bool accurate_enough(double error, double value) {
  return error <= kRelativeTarget * std::abs(value) + kAbsoluteFloor;
}

void check_order(int m) {
  if (m < 0 || m > kMaxOrder) {
    throw DomainError("Bessel order " + std::to_string(m) + " outside [0, " +
                      std::to_string(kMaxOrder) + "]");
  }
}

void check_argument(double modulus) {
  if (!(modulus <= kMaxArgument)) {
    throw DomainError("Bessel argument modulus " + std::to_string(modulus) +
                      " exceeds supported range " + std::to_string(kMaxArgument));
  }
}

// J_{m-1} and J_m in a common precision, chosen adaptively.
struct RealPair {
  double lower;  // J_{m-1}(x), unused for m = 0
  double value;  // J_m(x)
  double derivative;
};

RealPair j_and_derivative(int m, double x) {
  const auto value = j_series<Extended>(m, x);
  if (m == 0) {
    const auto next = j_series<Extended>(1, x);
    const double v = static_cast<double>(value.sum);
    const double d = -static_cast<double>(next.sum);
    if (accurate_enough(extended_error(value.magnitude, value.terms), v) &&
        accurate_enough(extended_error(next.magnitude, next.terms), d)) {
      return {0.0, v, d};
    }
    const auto qv = j_series<Quad>(0, Quad(x));
    const auto qn = j_series<Quad>(1, Quad(x));
    return {0.0, static_cast<double>(qv.sum), -static_cast<double>(qn.sum)};
  }
  const auto lower = j_series<Extended>(m - 1, x);
  if (x == 0.0) {
    return {static_cast<double>(lower.sum), static_cast<double>(value.sum), m == 1 ? 0.5 : 0.0};
  }
  const Extended ratio = Extended(m) / Extended(x);
  const Extended d = lower.sum - ratio * value.sum;
  const double error = extended_error(lower.magnitude, lower.terms) +
                       static_cast<double>(abs_value(ratio)) *
                           extended_error(value.magnitude, value.terms);
  const double v = static_cast<double>(value.sum);
  if (accurate_enough(extended_error(value.magnitude, value.terms), v) &&
      accurate_enough(error, static_cast<double>(d))) {
    return {static_cast<double>(lower.sum), v, static_cast<double>(d)};
  }
  const auto ql = j_series<Quad>(m - 1, Quad(x));
  const auto qv = j_series<Quad>(m, Quad(x));
  const Quad qd = ql.sum - Quad(m) / Quad(x) * qv.sum;
  return {static_cast<double>(ql.sum), static_cast<double>(qv.sum), static_cast<double>(qd)};
}

double j_value(int m, double x) {
  const auto s = j_series<Extended>(m, x);
  const double v = static_cast<double>(s.sum);
  if (accurate_enough(extended_error(s.magnitude, s.terms), v)) return v;
  return static_cast<double>(j_series<Quad>(m, Quad(x)).sum);
}

std::complex<double> to_complex(const ComplexValue<Quad>& v) {
  return {static_cast<double>(v.re), static_cast<double>(v.im)};
}

std::complex<double> to_complex(const ComplexValue<Extended>& v) {
  return {static_cast<double>(v.re), static_cast<double>(v.im)};
}

template <class T>
ComplexValue<T> lift(std::complex<double> z) {
  return {T(z.real()), T(z.imag())};
}

}  // namespace

double bessel_j(int m, double x) {
  check_order(m);
  check_argument(std::abs(x));
  return j_value(m, x);
}

std::complex<double> bessel_j(int m, std::complex<double> z) {
  check_order(m);
  check_argument(std::abs(z));
  if (z.imag() == 0.0) return {j_value(m, z.real()), 0.0};
  const auto s = j_series<Extended>(m, lift<Extended>(z));
  const auto v = to_complex(s.sum);
  if (accurate_enough(extended_error(s.magnitude, s.terms), std::abs(v))) return v;
  return to_complex(j_series<Quad>(m, lift<Quad>(z)).sum);
}

double bessel_j_prime(int m, double x) {
  check_order(m);
  check_argument(std::abs(x));
  return j_and_derivative(m, x).derivative;
}

std::complex<double> bessel_j_prime(int m, std::complex<double> z) {
  check_order(m);
  check_argument(std::abs(z));
  if (z.imag() == 0.0) return {j_and_derivative(m, z.real()).derivative, 0.0};
  if (m == 0) {
    const auto s = j_series<Extended>(1, lift<Extended>(z));
    const auto v = to_complex(s.sum);
    if (accurate_enough(extended_error(s.magnitude, s.terms), std::abs(v))) return -v;
    return -to_complex(j_series<Quad>(1, lift<Quad>(z)).sum);
  }
  const auto combine = [m](const auto& lower, const auto& value, auto zz) {
    using T = decltype(zz.re);
    // (m / z) = m * conj(z) / |z|^2
    const T denom = zz.re * zz.re + zz.im * zz.im;
    const T rre = T(m) * zz.re / denom;
    const T rim = -T(m) * zz.im / denom;
    ComplexValue<T> out;
    out.re = lower.sum.re - (rre * value.sum.re - rim * value.sum.im);
    out.im = lower.sum.im - (rre * value.sum.im + rim * value.sum.re);
    return out;
  };
  const auto ez = lift<Extended>(z);
  const auto lower = j_series<Extended>(m - 1, ez);
  const auto value = j_series<Extended>(m, ez);
  const auto d = to_complex(combine(lower, value, ez));
  const double error = extended_error(lower.magnitude, lower.terms) +
                       m / std::abs(z) * extended_error(value.magnitude, value.terms);
  if (accurate_enough(error, std::abs(d))) return d;
  const auto qz = lift<Quad>(z);
  return to_complex(combine(j_series<Quad>(m - 1, qz), j_series<Quad>(m, qz), qz));
}

double bessel_y(int m, double x) {
  check_order(m);
  if (!(x >= 1e-6) || x > kMaxArgument) {
    throw DomainError("Y_m argument " + std::to_string(x) + " outside [1e-6, 50]");
  }
  // Y_m(x) = (2/pi)(ln(x/2) + gamma) J_m(x)
  //        - (1/pi) sum_{k<m} (m-k-1)!/k! (x/2)^(2k-m)
  //        - (1/pi) sum_{k>=0} (H_k + H_{m+k}) (-x^2/4)^k (x/2)^m / (k!(m+k)!)
  const Quad qx = x;
  const Quad half = qx / 2;

  Quad finite = 0;
  if (m > 0) {
    // k = 0 term: (m-1)! (x/2)^-m; ratio term_{k+1}/term_k = (x/2)^2 / ((k+1)(m-k-1))
    Quad term = 1;
    for (int i = 1; i <= m - 1; ++i) term *= Quad(i);
    for (int i = 0; i < m; ++i) term /= half;
    for (int k = 0; k < m; ++k) {
      finite += term;
      if (k + 1 < m) term = term * half * half / Quad((k + 1) * (m - k - 1));
    }
  }

  Quad harmonic_k = 0;
  Quad harmonic_mk = 0;
  for (int i = 1; i <= m; ++i) harmonic_mk += Quad(1) / Quad(i);
  Quad term = 1;
  for (int i = 1; i <= m; ++i) term = term * half / Quad(i);
  const Quad w = -half * half;
  const auto& factors = recurrence_factors<Quad>(m);
  Quad log_series = (harmonic_k + harmonic_mk) * term;
  Quad magnitude = abs_value(log_series);
  for (int k = 1; k < kMaxTerms; ++k) {
    term = term * w * factors[k];
    harmonic_k += Quad(1) / Quad(k);
    harmonic_mk += Quad(1) / Quad(m + k);
    const Quad contribution = (harmonic_k + harmonic_mk) * term;
    log_series += contribution;
    magnitude += abs_value(contribution);
    if (k > 0.5 * x + 1 && abs_value(contribution) <= Quad(1e-36) * magnitude) break;
  }

  const double jm = static_cast<double>(j_series<Quad>(m, qx).sum);
  const double pi = std::numbers::pi;
  // The two series cancel heavily for large x; combine them before rounding.
  const double series = static_cast<double>(finite + log_series);
  return 2.0 / pi * (std::log(0.5 * x) + std::numbers::egamma) * jm - series / pi;
}

double bessel_y_prime(int m, double x) {
  if (m == 0) return -bessel_y(1, x);
  return bessel_y(m - 1, x) - m / x * bessel_y(m, x);
}

namespace {

template <class F, class DF>
double refine_root(F&& f, DF&& df, double a, double b) {
  double fa = f(a);
  while (b - a > 1e-10) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (fa < 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  double x = 0.5 * (a + b);
  const double slope = df(x);
  if (slope != 0.0) {
    const double step = f(x) / slope;
    if (std::abs(step) < b - a) x -= step;
  }
  return x;
}

// Scan f on a 0.05 grid over (0, upper] and refine every sign change.
template <class F, class DF>
std::vector<double> scan_roots(F&& f, DF&& df, double upper, std::size_t wanted) {
  constexpr double kStep = 0.05;
  std::vector<double> roots;
  double a = kStep;
  double fa = f(a);
  while (roots.size() < wanted) {
    const double b = std::min(a + kStep, upper);
    if (b <= a) break;
    const double fb = f(b);
    if (fb == 0.0) {
      roots.push_back(b);
    } else if ((fa < 0) != (fb < 0) && fa != 0.0) {
      roots.push_back(refine_root(f, df, a, b));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

double second_derivative(int p, double x) {
  // Bessel ODE: x^2 J'' + x J' + (x^2 - p^2) J = 0
  const auto jp = j_and_derivative(p, x);
  return -jp.derivative / x - (1.0 - static_cast<double>(p) * p / (x * x)) * jp.value;
}

}  // namespace

std::vector<double> jprime_zeros_below(int p, double upper) {
  check_order(p);
  check_argument(upper);
  auto f = [p](double x) { return j_and_derivative(p, x).derivative; };
  auto df = [p](double x) { return second_derivative(p, x); };
  std::vector<double> roots = scan_roots(f, df, upper, static_cast<std::size_t>(-1));
  while (!roots.empty() && roots.back() >= upper) roots.pop_back();
  if (p == 0) roots.insert(roots.begin(), 0.0);
  return roots;
}

BesselRootTable jprime_zeros(int p, int count) {
  check_order(p);
  if (count < 1) throw DomainError("root count must be >= 1");
  BesselRootTable table{p, {}};
  if (p == 0) {
    table.roots.push_back(0.0);
    if (count == 1) return table;
  }
  const std::size_t wanted = static_cast<std::size_t>(p == 0 ? count - 1 : count);
  // j'_{p,q} < j_{p,q} < (q + p/2) pi + 5 comfortably for every p <= kMaxOrder.
  const double bound = (static_cast<double>(wanted) + 0.5 * p + 1.0) * std::numbers::pi + 5.0;
  const double upper = std::min(bound, kMaxArgument);
  auto f = [p](double x) { return j_and_derivative(p, x).derivative; };
  auto df = [p](double x) { return second_derivative(p, x); };
  const auto found = scan_roots(f, df, upper, wanted);
  if (found.size() < wanted) {
    if (upper < bound) {
      throw DomainError("requested J'_" + std::to_string(p) + " roots exceed the supported argument range");
    }
    throw NumericalError("J'_" + std::to_string(p) + " root scan bound exhausted before " +
                         std::to_string(count) + " roots");
  }
  table.roots.insert(table.roots.end(), found.begin(), found.end());
  return table;
}

std::vector<double> j_zeros(int p, int count) {
  check_order(p);
  if (count < 1) throw DomainError("root count must be >= 1");
  const double bound = (count + 0.5 * p + 1.0) * std::numbers::pi + 5.0;
  const double upper = std::min(bound, kMaxArgument);
  auto f = [p](double x) { return j_value(p, x); };
  auto df = [p](double x) { return j_and_derivative(p, x).derivative; };
  auto found = scan_roots(f, df, upper, static_cast<std::size_t>(count));
  if (found.size() < static_cast<std::size_t>(count)) {
    if (upper < bound) throw DomainError("requested J_p roots exceed the supported argument range");
    throw NumericalError("J_p root scan bound exhausted");
  }
  return found;
}

}  // namespace steklov::specfun
