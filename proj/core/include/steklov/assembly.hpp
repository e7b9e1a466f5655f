#pragma once

#include <Eigen/Dense>

#include "steklov/diskbasis.hpp"
#include "steklov/medium.hpp"
#include "steklov/quadrature.hpp"

namespace steklov {

/// Galerkin pencil (A + lambda B) c = 0 on the span of a Neumann basis.
///
/// A_ij = sigma_j delta_ij - k^2 int_D n phi_i phi_j  (complex symmetric)
/// B_ij = int_{dD} phi_i phi_j ds                      (real, rank 1 per angular block)
struct GalerkinSystem {
  Eigen::MatrixXcd A;
  Eigen::MatrixXd B;
  BasisSet basis;
  double k = 1.0;
  MediumProfile medium;
  QuadratureRule quadrature;

  std::size_t size() const { return basis.size(); }
  /// Leading n x n sub-pencil (the first n basis functions).
  GalerkinSystem leading(std::size_t n) const;
};

/// Polar quadrature nodes on the unit disk with the medium sampled at each.
/// Weights include the Jacobian r.
struct DiskNodes {
  std::vector<double> r;
  std::vector<double> theta;
  std::vector<double> weight;
  std::vector<std::complex<double>> n;
  std::size_t size() const { return r.size(); }
};

/// Builds the node table for `medium` under `quad`. With split_at_interface
/// the radial interval is split at the inclusion radius of every angular
/// node. Throws ConfigError when an inclusion radius leaves (0, 1) or the
/// medium is inadmissible at a node.
DiskNodes disk_nodes(const MediumProfile& medium, const QuadratureRule& quad);

/// Basis values phi_j(node), one row per node (column-major, nodes x N).
Eigen::MatrixXd basis_values(const BasisSet& basis, const DiskNodes& nodes, int threads = 0);

/// Assembles the pencil. threads <= 0 uses the available parallelism; the
/// result is bit-identical for any thread count.
GalerkinSystem assemble(const BasisSet& basis, const MediumProfile& medium, double k,
                        const QuadratureRule& quad = {}, int threads = 0);

/// B_ij = c_p t_i t_j for equal (p, kind), 0 otherwise, with t the boundary
/// trace coefficient and c_p = 2pi (p = 0) or pi.
Eigen::MatrixXd boundary_mass_analytic(const BasisSet& basis);

}  // namespace steklov
