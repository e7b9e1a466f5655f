#include "steklov/assembly.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "steklov/error.hpp"
#include "steklov/parallel.hpp"

namespace steklov {

GalerkinSystem GalerkinSystem::leading(std::size_t n) const {
  if (n == 0 || n > size()) throw ConfigError(fmt::format("sub-pencil size {} outside [1, {}]", n, size()));
  GalerkinSystem sub;
  const auto& fs = basis.functions();
  sub.basis = BasisSet({fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(n)}, basis.ordering());
  const auto m = static_cast<Eigen::Index>(n);
  sub.A = A.topLeftCorner(m, m);
  sub.B = B.topLeftCorner(m, m);
  sub.k = k;
  sub.medium = medium;
  sub.quadrature = quadrature;
  return sub;
}

DiskNodes disk_nodes(const MediumProfile& medium, const QuadratureRule& quad) {
  quad.validate();
  const auto reference = gauss_legendre(quad.radial_points);
  const auto angular = angular_points(quad.angular_rule, quad.angular_points);
  DiskNodes nodes;
  const std::size_t per_theta = reference.nodes.size() * (quad.split_at_interface && medium.is_inclusion() ? 2 : 1);
  nodes.r.reserve(per_theta * angular.nodes.size());
  nodes.theta.reserve(nodes.r.capacity());
  nodes.weight.reserve(nodes.r.capacity());
  nodes.n.reserve(nodes.r.capacity());

  const auto add_segment = [&](double a, double b, double theta, double w_theta, int region) {
    const auto seg = map_to_interval(reference, a, b);
    for (std::size_t i = 0; i < seg.nodes.size(); ++i) {
      const double r = seg.nodes[i];
      const auto n = region < 0 ? eval_medium(medium, r, theta) : eval_medium_region(medium, region == 1, r, theta);
      check_admissible(n, r, theta);
      nodes.r.push_back(r);
      nodes.theta.push_back(theta);
      nodes.weight.push_back(seg.weights[i] * r * w_theta);
      nodes.n.push_back(n);
    }
  };

  for (std::size_t t = 0; t < angular.nodes.size(); ++t) {
    const double theta = angular.nodes[t];
    const auto rho = medium.interface_radius(theta);
    if (rho && !(*rho > 0.0 && *rho < 1.0)) {
      throw ConfigError(fmt::format("inclusion radius {} at theta={} outside (0, 1)", *rho, theta));
    }
    if (rho && quad.split_at_interface) {
      add_segment(0.0, *rho, theta, angular.weights[t], 1);
      add_segment(*rho, 1.0, theta, angular.weights[t], 0);
    } else {
      add_segment(0.0, 1.0, theta, angular.weights[t], -1);
    }
  }
  return nodes;
}

Eigen::MatrixXd basis_values(const BasisSet& basis, const DiskNodes& nodes, int threads) {
  const auto nb = basis.size();
  // Radial factors are the expensive part; nodes that share a radius (every
  // medium except star-shaped inclusions) share one evaluation.
  std::map<double, std::size_t> radius_index;
  std::vector<double> radii;
  std::vector<std::size_t> node_radius(nodes.size());
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    const auto [it, inserted] = radius_index.try_emplace(nodes.r[l], radii.size());
    if (inserted) radii.push_back(nodes.r[l]);
    node_radius[l] = it->second;
  }
  Eigen::MatrixXd radial(static_cast<Eigen::Index>(radii.size()), static_cast<Eigen::Index>(nb));
  parallel_for(radii.size(), threads, [&](std::size_t u) {
    for (std::size_t j = 0; j < nb; ++j) {
      radial(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(j)) = basis[j].radial(radii[u]);
    }
  });
  Eigen::MatrixXd phi(static_cast<Eigen::Index>(nodes.size()), static_cast<Eigen::Index>(nb));
  for (std::size_t j = 0; j < nb; ++j) {
    double last_theta = std::numeric_limits<double>::quiet_NaN();
    double ang = 0.0;
    for (std::size_t l = 0; l < nodes.size(); ++l) {
      if (nodes.theta[l] != last_theta) {
        last_theta = nodes.theta[l];
        ang = basis[j].angular(last_theta);
      }
      phi(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j)) =
          radial(static_cast<Eigen::Index>(node_radius[l]), static_cast<Eigen::Index>(j)) * ang;
    }
  }
  return phi;
}

Eigen::MatrixXd boundary_mass_analytic(const BasisSet& basis) {
  const auto nb = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(nb, nb);
  std::vector<double> trace(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) trace[i] = boundary_trace_coefficient(basis[i]);
  for (Eigen::Index i = 0; i < nb; ++i) {
    const auto& bi = basis[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < nb; ++j) {
      const auto& bj = basis[static_cast<std::size_t>(j)];
      if (bi.p == bj.p && bi.kind == bj.kind) {
        B(i, j) = bi.angular_weight() * trace[static_cast<std::size_t>(i)] * trace[static_cast<std::size_t>(j)];
        B(j, i) = B(i, j);
      }
    }
  }
  return B;
}

GalerkinSystem assemble(const BasisSet& basis, const MediumProfile& medium, double k, const QuadratureRule& quad,
                        int threads) {
  if (basis.empty()) throw ConfigError("cannot assemble an empty basis");
  if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError(fmt::format("wavenumber must be positive, got {}", k));

  const auto nodes = disk_nodes(medium, quad);
  const auto phi = basis_values(basis, nodes, threads);
  const auto nb = static_cast<Eigen::Index>(basis.size());
  const auto nl = static_cast<Eigen::Index>(nodes.size());

  Eigen::VectorXcd wn(nl);
  for (Eigen::Index l = 0; l < nl; ++l) wn(l) = nodes.weight[static_cast<std::size_t>(l)] * nodes.n[static_cast<std::size_t>(l)];

  // Upper triangle row by row; each entry is a fixed ascending-node sum.
  Eigen::MatrixXcd mass(nb, nb);
  parallel_for(basis.size(), threads, [&](std::size_t row) {
    const auto i = static_cast<Eigen::Index>(row);
    Eigen::VectorXcd weighted = wn.cwiseProduct(phi.col(i).cast<std::complex<double>>());
    for (Eigen::Index j = i; j < nb; ++j) {
      std::complex<double> sum = 0.0;
      for (Eigen::Index l = 0; l < nl; ++l) sum += weighted(l) * phi(l, j);
      mass(i, j) = sum;
    }
  });

  GalerkinSystem sys;
  sys.A.resize(nb, nb);
  const double k2 = k * k;
  for (Eigen::Index i = 0; i < nb; ++i) {
    for (Eigen::Index j = i; j < nb; ++j) {
      std::complex<double> a = -k2 * mass(i, j);
      if (i == j) a += basis[static_cast<std::size_t>(i)].sigma;
      sys.A(i, j) = a;
      sys.A(j, i) = a;
    }
  }
  sys.B = boundary_mass_analytic(basis);
  sys.basis = basis;
  sys.k = k;
  sys.medium = medium;
  sys.quadrature = quad;
  return sys;
}

}  // namespace steklov
