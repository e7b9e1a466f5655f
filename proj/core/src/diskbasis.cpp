#include "steklov/diskbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "steklov/error.hpp"
#include "steklov/specfun.hpp"

namespace steklov {

std::string_view to_string(BasisOrdering ordering) {
  switch (ordering) {
    case BasisOrdering::sigma_ascending:
      return "sigma_ascending";
    case BasisOrdering::p_major:
      return "p_major";
    case BasisOrdering::q_major:
      return "q_major";
  }
  return "q_major";
}

BasisOrdering parse_ordering(std::string_view text) {
  if (text == "sigma_ascending") return BasisOrdering::sigma_ascending;
  if (text == "p_major") return BasisOrdering::p_major;
  if (text == "q_major") return BasisOrdering::q_major;
  throw ConfigError("unknown basis ordering '" + std::string(text) + "'");
}

double BasisFunction::sqrt_sigma() const { return std::sqrt(sigma); }

double BasisFunction::angular_weight() const {
  return p == 0 ? 2.0 * std::numbers::pi : std::numbers::pi;
}

double BasisFunction::radial(double r) const {
  if (sigma == 0.0) return norm_const;
  return norm_const * specfun::bessel_j(p, sqrt_sigma() * r);
}

double BasisFunction::angular(double theta) const {
  return kind == AngularKind::cosine ? std::cos(p * theta) : std::sin(p * theta);
}

BasisSet::BasisSet(std::vector<BasisFunction> functions, BasisOrdering ordering)
    : functions_(std::move(functions)), ordering_(ordering) {
  std::set<std::tuple<int, int, AngularKind>> seen;
  for (const auto& f : functions_) {
    if (f.kind == AngularKind::sine && f.p == 0) {
      throw ConfigError("sine mode requires p >= 1");
    }
    if (!seen.emplace(f.p, f.q, f.kind).second) {
      throw ConfigError("duplicate basis function (p=" + std::to_string(f.p) +
                        ", q=" + std::to_string(f.q) + ")");
    }
  }
}

std::size_t BasisSet::angular_block_count() const {
  std::set<std::pair<int, AngularKind>> blocks;
  for (const auto& f : functions_) blocks.emplace(f.p, f.kind);
  return blocks.size();
}

double neumann_norm_const(int p, double root) {
  if (root == 0.0) return 1.0 / std::sqrt(std::numbers::pi);
  // int_D J_p(x r)^2 {cos,sin}^2(p theta) = c_p (1 - p^2/x^2) J_p(x)^2 / 2 when J'_p(x) = 0
  const double c_p = p == 0 ? 2.0 * std::numbers::pi : std::numbers::pi;
  const double jp = specfun::bessel_j(p, root);
  const double squared_norm = c_p * (1.0 - static_cast<double>(p) * p / (root * root)) * jp * jp / 2.0;
  return 1.0 / std::sqrt(squared_norm);
}

namespace {

BasisFunction make_function(int p, int q, AngularKind kind, double root) {
  return BasisFunction{p, q, kind, root * root, neumann_norm_const(p, root)};
}

void sort_functions(std::vector<BasisFunction>& fs, BasisOrdering ordering) {
  const auto kind_rank = [](AngularKind k) { return k == AngularKind::cosine ? 0 : 1; };
  switch (ordering) {
    case BasisOrdering::sigma_ascending:
      std::stable_sort(fs.begin(), fs.end(), [&](const auto& a, const auto& b) {
        return std::tuple(a.sigma, a.p, kind_rank(a.kind)) < std::tuple(b.sigma, b.p, kind_rank(b.kind));
      });
      break;
    case BasisOrdering::p_major:
      std::stable_sort(fs.begin(), fs.end(), [&](const auto& a, const auto& b) {
        return std::tuple(a.p, kind_rank(a.kind), a.q) < std::tuple(b.p, kind_rank(b.kind), b.q);
      });
      break;
    case BasisOrdering::q_major:
      std::stable_sort(fs.begin(), fs.end(), [&](const auto& a, const auto& b) {
        return std::tuple(a.q, a.p, kind_rank(a.kind)) < std::tuple(b.q, b.p, kind_rank(b.kind));
      });
      break;
  }
}

}  // namespace

BasisSet build_basis(const BasisSpec& spec) {
  if (spec.p_max < 0 || spec.q_max < 1) {
    throw ConfigError("basis requires p_max >= 0 and q_max >= 1");
  }
  if (spec.p_max > specfun::kMaxOrder) {
    throw ConfigError("p_max exceeds supported Bessel order " + std::to_string(specfun::kMaxOrder));
  }
  const int kinds_for_p = spec.include_sin ? 2 : 1;
  const int available = spec.q_max * (1 + kinds_for_p * spec.p_max);
  if (spec.truncation < 1) throw ConfigError("basis truncation must be >= 1");
  if (spec.truncation > available) {
    throw ConfigError("truncation " + std::to_string(spec.truncation) + " exceeds the " +
                      std::to_string(available) + " available basis functions");
  }

  std::vector<BasisFunction> fs;
  fs.reserve(static_cast<std::size_t>(available));
  for (int p = 0; p <= spec.p_max; ++p) {
    const auto table = specfun::jprime_zeros(p, spec.q_max);
    for (int q = 1; q <= spec.q_max; ++q) {
      const double root = table.roots[static_cast<std::size_t>(q - 1)];
      fs.push_back(make_function(p, q, AngularKind::cosine, root));
      if (spec.include_sin && p > 0) fs.push_back(make_function(p, q, AngularKind::sine, root));
    }
  }
  sort_functions(fs, spec.ordering);
  fs.resize(static_cast<std::size_t>(spec.truncation));
  return BasisSet(std::move(fs), spec.ordering);
}

BasisSet build_basis_below(double max_sqrt_sigma, bool include_sin) {
  std::vector<BasisFunction> fs;
  for (int p = 0; p <= specfun::kMaxOrder; ++p) {
    const auto roots = specfun::jprime_zeros_below(p, max_sqrt_sigma);
    if (roots.empty()) break;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const int q = static_cast<int>(i) + 1;
      fs.push_back(make_function(p, q, AngularKind::cosine, roots[i]));
      if (include_sin && p > 0) fs.push_back(make_function(p, q, AngularKind::sine, roots[i]));
    }
  }
  sort_functions(fs, BasisOrdering::sigma_ascending);
  return BasisSet(std::move(fs), BasisOrdering::sigma_ascending);
}

double eval_basis(const BasisFunction& b, double r, double theta) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("basis evaluation radius " + std::to_string(r) + " outside [0, 1]");
  }
  return b.radial(r) * b.angular(theta);
}

double boundary_trace_coefficient(const BasisFunction& b) { return b.radial(1.0); }

}  // namespace steklov
