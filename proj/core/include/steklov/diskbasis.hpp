#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace steklov {

enum class AngularKind { cosine, sine };

/// Order in which the (p, q, kind) modes are enumerated before truncation.
///
/// q_major lists every angular order for q = 1, then q = 2, and so on; this
/// is the enumeration under which the N = 10/15/20 leading-eigenvalue
/// studies nest as complete radial shells. sigma_ascending sorts by Neumann
/// eigenvalue (ties: ascending p, cosine before sine). p_major lists all
/// radial indices of p = 0 first.
enum class BasisOrdering { sigma_ascending, p_major, q_major };

std::string_view to_string(BasisOrdering ordering);
BasisOrdering parse_ordering(std::string_view text);

/// One L2(D)-normalized Neumann eigenfunction of the Laplacian on the unit
/// disk: norm_const * J_p(sqrt(sigma) r) * {cos, sin}(p theta).
struct BasisFunction {
  int p = 0;
  int q = 1;
  AngularKind kind = AngularKind::cosine;
  double sigma = 0.0;
  double norm_const = 0.0;

  double sqrt_sigma() const;
  /// Integral of cos^2(p theta) (or sin^2) over [0, 2pi): 2pi for p = 0, pi otherwise.
  double angular_weight() const;
  bool is_constant() const { return p == 0 && sigma == 0.0; }
  double radial(double r) const;    // norm_const * J_p(sqrt(sigma) r)
  double angular(double theta) const;
  friend bool operator==(const BasisFunction&, const BasisFunction&) = default;
};

struct BasisSpec {
  int p_max = 4;
  int q_max = 5;
  bool include_sin = false;
  int truncation = 25;
  BasisOrdering ordering = BasisOrdering::q_major;
  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

/// Ordered, truncated collection of basis functions.
class BasisSet {
 public:
  BasisSet() = default;
  BasisSet(std::vector<BasisFunction> functions, BasisOrdering ordering);

  std::size_t size() const { return functions_.size(); }
  bool empty() const { return functions_.empty(); }
  const BasisFunction& operator[](std::size_t i) const { return functions_[i]; }
  auto begin() const { return functions_.begin(); }
  auto end() const { return functions_.end(); }
  const std::vector<BasisFunction>& functions() const { return functions_; }
  BasisOrdering ordering() const { return ordering_; }

  /// Number of distinct (p, kind) angular blocks present.
  std::size_t angular_block_count() const;

 private:
  std::vector<BasisFunction> functions_;
  BasisOrdering ordering_ = BasisOrdering::q_major;
};

/// Builds the first `truncation` modes of {0 <= p <= p_max, 1 <= q <= q_max}
/// under the requested ordering. Throws ConfigError when the truncation
/// exceeds the number of available modes or is not positive.
BasisSet build_basis(const BasisSpec& spec);

/// Every mode with sqrt(sigma) < max_sqrt_sigma, sigma-ascending.
BasisSet build_basis_below(double max_sqrt_sigma, bool include_sin);

/// Closed-form L2(D) normalization constant of the mode with root x = sqrt(sigma).
double neumann_norm_const(int p, double root);

/// phi(r, theta). Throws DomainError for r outside [0, 1].
double eval_basis(const BasisFunction& b, double r, double theta);

/// Radial part of phi on the boundary: the coefficient of cos(p theta) or
/// sin(p theta) in phi restricted to r = 1.
double boundary_trace_coefficient(const BasisFunction& b);

}  // namespace steklov
