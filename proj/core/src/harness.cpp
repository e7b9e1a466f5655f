#include "steklov/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <numbers>

#include <Eigen/SVD>

#include "steklov/assembly.hpp"
#include "steklov/eigensolve.hpp"
#include "steklov/error.hpp"
#include "steklov/oracles.hpp"
#include "steklov/parallel.hpp"
#include "steklov/specfun.hpp"

namespace steklov {
namespace {

void check_n_values(const std::vector<int>& n_values) {
  if (n_values.empty()) throw ConfigError("at least one N value is required");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1) throw ConfigError(fmt::format("N values must be positive, got {}", n_values[i]));
    if (i > 0 && n_values[i] < n_values[i - 1]) throw ConfigError("N values must be non-decreasing");
  }
}

GalerkinSystem assemble_for(const RunConfig& config, int truncation, int threads) {
  BasisSpec spec = config.basis;
  spec.truncation = truncation;
  return assemble(build_basis(spec), config.medium, config.wavenumber, config.quadrature, threads);
}

// Reference basis: the first `count` sigma-ascending modes.
BasisSet reference_basis(std::size_t count, bool include_sin) {
  double cutoff = 2.0 * std::sqrt(static_cast<double>(count)) + 4.0;
  for (;;) {
    if (cutoff > specfun::kMaxArgument) throw ConfigError("reference expansion exceeds the supported Bessel range");
    auto basis = build_basis_below(cutoff, include_sin);
    if (basis.size() >= count) {
      const auto& fs = basis.functions();
      return BasisSet({fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(count)}, BasisOrdering::sigma_ascending);
    }
    cutoff = std::min(cutoff + 4.0, specfun::kMaxArgument);
  }
}

CheckResult make_check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

bool bit_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(std::complex<double>) * static_cast<std::size_t>(a.size())) == 0;
}

}  // namespace

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  if (lx.size() < 2) return std::nullopt;
  const double n = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

ConvergenceTable convergence_study(const RunConfig& config, const std::vector<int>& n_values, int threads) {
  check_n_values(n_values);
  const auto full = assemble_for(config, n_values.back(), threads);
  ConvergenceTable table;
  if (const auto n = config.medium.uniform_value()) table.exact = sov_first(config.wavenumber, *n).lambda;

  std::vector<ConvergenceRow> rows(n_values.size());
  parallel_for(n_values.size(), threads, [&](std::size_t i) {
    const auto spectrum = solve_spectrum(full.leading(static_cast<std::size_t>(n_values[i])));
    if (spectrum.size() == 0) throw NumericalError(fmt::format("no finite eigenvalue at N={}", n_values[i]));
    rows[i].N = n_values[i];
    rows[i].lambda = spectrum[0].lambda;
    if (table.exact) rows[i].rel_error = std::abs(rows[i].lambda - *table.exact) / std::abs(*table.exact);
  });
  table.rows = std::move(rows);
  if (table.exact) {
    std::vector<double> ns;
    std::vector<double> errors;
    for (const auto& row : table.rows) {
      ns.push_back(row.N);
      errors.push_back(std::abs(row.lambda - *table.exact));
    }
    table.slope = loglog_slope(ns, errors);
  }
  return table;
}

ProjectionStudy projection_rate_study(std::string_view function_id, const std::vector<int>& n_values,
                                      bool include_sin, int threads) {
  check_n_values(n_values);
  const auto reference_size = static_cast<std::size_t>(4 * n_values.back());
  const auto basis = reference_basis(reference_size, include_sin);

  std::function<double(double, double)> f;
  if (function_id == "bump") {
    f = [](double r, double) { return (1.0 - r * r) * (1.0 - r * r); };
  } else if (function_id.starts_with("basis:")) {
    int j = 0;
    try {
      j = std::stoi(std::string(function_id.substr(6)));
    } catch (const std::exception&) {
      throw ConfigError(fmt::format("malformed test function '{}'", function_id));
    }
    if (j < 1 || static_cast<std::size_t>(j) > basis.size()) {
      throw ConfigError(fmt::format("test function index {} outside [1, {}]", j, basis.size()));
    }
    const auto b = basis[static_cast<std::size_t>(j - 1)];
    f = [b](double r, double theta) { return eval_basis(b, r, theta); };
  } else {
    throw ConfigError(fmt::format("unknown test function '{}'", function_id));
  }

  // Fine unsplit rule: the reference modes oscillate up to sqrt(sigma) ~ 45.
  const QuadratureRule rule{128, 256, AngularRule::trapezoid, false};
  const auto nodes = disk_nodes(constant_medium(1.0), rule);
  const auto phi = basis_values(basis, nodes, threads);
  Eigen::VectorXd wf(static_cast<Eigen::Index>(nodes.size()));
  double norm2 = 0.0;
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    const double v = f(nodes.r[l], nodes.theta[l]);
    wf(static_cast<Eigen::Index>(l)) = nodes.weight[l] * v;
    norm2 += nodes.weight[l] * v * v;
  }
  const Eigen::VectorXd coeffs = phi.transpose() * wf;

  ProjectionStudy study;
  study.function_id = std::string(function_id);
  study.reference_size = basis.size();
  study.tail_fraction = 1.0 - coeffs.squaredNorm() / norm2;
  if (study.tail_fraction > kProjectionTailLimit) {
    throw NumericalError(fmt::format("inconclusive: reference expansion misses a fraction {:.3e} of ||f||^2",
                                     study.tail_fraction));
  }
  std::vector<double> ns;
  std::vector<double> l2;
  std::vector<double> h1;
  for (const int N : n_values) {
    double e0 = 0.0;
    double e1 = 0.0;
    for (std::size_t j = static_cast<std::size_t>(N); j < basis.size(); ++j) {
      const double c2 = coeffs(static_cast<Eigen::Index>(j)) * coeffs(static_cast<Eigen::Index>(j));
      e0 += c2;
      e1 += (1.0 + basis[j].sigma) * c2;
    }
    study.rows.push_back({N, std::sqrt(e0), std::sqrt(e1)});
    ns.push_back(N);
    l2.push_back(std::sqrt(e0));
    h1.push_back(std::sqrt(e1));
  }
  study.l2_slope = loglog_slope(ns, l2);
  study.h1_slope = loglog_slope(ns, h1);
  return study;
}

std::vector<BoundaryErrorRow> boundary_eigenfunction_error(const RunConfig& config, const std::vector<int>& n_values,
                                                           int threads) {
  check_n_values(n_values);
  const auto uniform = config.medium.uniform_value();
  if (!uniform || uniform->imag() != 0.0 || !(uniform->real() > 0.0)) {
    throw ConfigError("boundary eigenfunction error needs a constant real medium");
  }
  const double k = config.wavenumber;
  const double s = k * std::sqrt(uniform->real());
  const double j0 = specfun::bessel_j(0, s);
  const double j1 = specfun::bessel_j(1, s);
  const double w_norm = std::sqrt(std::numbers::pi * (j0 * j0 + j1 * j1));

  const auto full = assemble_for(config, n_values.back(), threads);
  std::vector<BoundaryErrorRow> rows(n_values.size());
  parallel_for(n_values.size(), threads, [&](std::size_t i) {
    const auto sys = full.leading(static_cast<std::size_t>(n_values[i]));
    const auto spectrum = solve_spectrum(sys);
    if (spectrum.size() == 0) throw NumericalError(fmt::format("no finite eigenvalue at N={}", n_values[i]));
    const auto& c = spectrum[0].coeffs;

    std::complex<double> inner = 0.0;     // (w_N, w)_{L2(D)}
    std::complex<double> boundary = 0.0;  // int_{dD} w_N w ds / J_0(s)
    for (std::size_t j = 0; j < sys.basis.size(); ++j) {
      const auto& b = sys.basis[j];
      if (b.p != 0 || b.kind != AngularKind::cosine) continue;
      const double x = b.sqrt_sigma();
      // int_0^1 J_0(s r) J_0(x r) r dr with J_0'(x) = 0 (Lommel).
      const double radial = s * j1 * specfun::bessel_j(0, x) / (s * s - x * x);
      inner += c(static_cast<Eigen::Index>(j)) * 2.0 * std::numbers::pi * b.norm_const * radial;
      boundary += c(static_cast<Eigen::Index>(j)) * 2.0 * std::numbers::pi * boundary_trace_coefficient(b);
    }
    const double wn_norm = c.norm();
    const double wn_boundary2 = (c.adjoint() * sys.B.cast<std::complex<double>>() * c)(0).real();
    const auto phase = std::abs(inner) > 0.0 ? std::conj(inner) / std::abs(inner) : std::complex<double>(1.0);
    const double a = wn_boundary2 / (wn_norm * wn_norm);
    const double b = 2.0 * std::numbers::pi * j0 * j0 / (w_norm * w_norm);
    const double cross = (phase * boundary).real() * j0 / (wn_norm * w_norm);
    rows[i] = {n_values[i], std::sqrt(std::max(0.0, a + b - 2.0 * cross))};
  });
  return rows;
}

bool ValidationReport::passed() const { return failures() == 0; }

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; }));
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::warn:
      return "WARN";
    case CheckStatus::fail:
      return "FAIL";
  }
  return "FAIL";
}

ValidationReport validate(const RunConfig& config, int threads) {
  ValidationReport report;
  auto& out = report.checks;
  const double k = config.wavenumber;

  {
    double worst = 0.0;
    for (int m = 0; m <= 2; ++m) {
      for (int i = 0; i < 20; ++i) {
        const double x = 0.1 * std::pow(400.0, i / 19.0);
        const double w = specfun::bessel_j(m, x) * specfun::bessel_y_prime(m, x) -
                         specfun::bessel_j_prime(m, x) * specfun::bessel_y(m, x);
        worst = std::max(worst, std::abs(w - 2.0 / (std::numbers::pi * x)));
      }
    }
    out.push_back(make_check("wronskian", worst <= 1e-10, fmt::format("max deviation {:.3e} (limit 1e-10)", worst)));
  }

  const auto basis = build_basis(config.basis);
  {
    double worst = 0.0;
    for (const auto& b : basis) {
      if (b.sigma > 0.0) worst = std::max(worst, std::abs(specfun::bessel_j_prime(b.p, b.sqrt_sigma())));
    }
    out.push_back(make_check("root_residual", worst <= 1e-12, fmt::format("max |J'_p(root)| {:.3e} (limit 1e-12)", worst)));
  }
  {
    const auto nodes = disk_nodes(constant_medium(1.0), QuadratureRule{});
    const auto phi = basis_values(basis, nodes, threads);
    const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(nodes.weight.data(), static_cast<Eigen::Index>(nodes.size()));
    const Eigen::MatrixXd gram = phi.transpose() * w.asDiagonal() * phi;
    const auto nb = static_cast<Eigen::Index>(basis.size());
    const double dev = (gram - Eigen::MatrixXd::Identity(nb, nb)).cwiseAbs().maxCoeff();
    out.push_back(make_check("orthonormality", dev <= 1e-9, fmt::format("max |G - I| {:.3e} (limit 1e-9)", dev)));
  }

  GalerkinSystem sys;
  try {
    sys = assemble(basis, config.medium, k, config.quadrature, threads);
  } catch (const Error& e) {
    out.push_back(make_check("assembly", false, e.what()));
    return report;
  }
  {
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.B);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv(i) > 1e-12 * smax ? 1 : 0;
    const auto blocks = basis.angular_block_count();
    out.push_back(make_check("boundary_rank", rank == blocks, fmt::format("rank(B) = {}, angular blocks = {}", rank, blocks)));
    const bool sym = sys.A == sys.A.transpose() && sys.B == sys.B.transpose();
    out.push_back(make_check("symmetry", sym, sym ? "A = A^T and B = B^T exactly" : "asymmetric pencil"));
  }

  const double cond = condition_estimate(sys.A);
  {
    CheckResult c{"interior_resonance", CheckStatus::pass, fmt::format("condition estimate of A {:.3e}", cond)};
    if (!(cond <= kMaxCondition)) {
      c.status = CheckStatus::fail;
      c.detail += " exceeds 1e12: wavenumber at an interior eigenvalue";
    } else if (cond > 1e8) {
      c.status = CheckStatus::warn;
      c.detail += " above 1e8: wavenumber close to an interior eigenvalue";
    }
    out.push_back(c);
    if (c.status == CheckStatus::fail) return report;
  }

  const auto spectrum = solve_spectrum(sys);
  {
    const double scale_a = sys.A.norm();
    const double scale_b = sys.B.norm();
    double worst_ratio = 0.0;
    double worst_norm = 0.0;
    for (const auto& pair : spectrum.pairs) {
      const double bound = 1e-8 * (scale_a + std::abs(pair.lambda) * scale_b);
      worst_ratio = std::max(worst_ratio, pair.residual / bound);
      const double bn = (pair.coeffs.adjoint() * sys.B.cast<std::complex<double>>() * pair.coeffs)(0).real();
      worst_norm = std::max(worst_norm, std::abs(bn - 1.0));
    }
    out.push_back(make_check("residuals", worst_ratio <= 1.0,
                             fmt::format("max residual / bound {:.3e} over {} pairs", worst_ratio, spectrum.size())));
    out.push_back(make_check("boundary_normalization", worst_norm <= 1e-10,
                             fmt::format("max |c^H B c - 1| {:.3e} (limit 1e-10)", worst_norm)));
    out.push_back(make_check("eigenvalue_count", spectrum.size() == basis.angular_block_count(),
                             fmt::format("{} eigenvalues, rank(B) = {}", spectrum.size(), basis.angular_block_count())));
  }

  const auto solve_constant = [&](double n) {
    return solve_spectrum(assemble(basis, constant_medium(n), k, config.quadrature, threads));
  };
  {
    const auto real_spectrum = solve_constant(2.0);
    double worst = 0.0;
    for (const auto& pair : real_spectrum.pairs) worst = std::max(worst, std::abs(pair.lambda.imag()));
    out.push_back(make_check("real_medium_realness", worst <= 1e-8, fmt::format("max |Im lambda| {:.3e} at n = 2", worst)));
  }
  {
    std::vector<double> lambdas;
    bool increasing = true;
    for (double n = 1.0; n <= 4.0 + 1e-12; n += 0.5) {
      lambdas.push_back(solve_constant(n)[0].lambda.real());
      if (lambdas.size() > 1 && !(lambdas.back() > lambdas[lambdas.size() - 2])) increasing = false;
    }
    out.push_back(make_check("monotonicity", increasing,
                             fmt::format("lambda_1 over n = 1..4: {:.6f}", fmt::join(lambdas, ", "))));
  }
  {
    const auto constant_sys = assemble(basis, constant_medium(2.0), k, config.quadrature, threads);
    const auto full = solve_spectrum(constant_sys);
    std::map<std::pair<int, int>, std::vector<Eigen::Index>> blocks;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      blocks[{basis[j].p, static_cast<int>(basis[j].kind)}].push_back(static_cast<Eigen::Index>(j));
    }
    std::vector<std::complex<double>> pieces;
    for (const auto& [key, idx] : blocks) {
      GalerkinSystem block;
      std::vector<BasisFunction> fs;
      for (const auto j : idx) fs.push_back(basis[static_cast<std::size_t>(j)]);
      block.basis = BasisSet(fs, basis.ordering());
      block.A = constant_sys.A(idx, idx);
      block.B = constant_sys.B(idx, idx);
      block.k = k;
      for (const auto& pair : solve_spectrum(block).pairs) pieces.push_back(pair.lambda);
    }
    std::sort(pieces.begin(), pieces.end(), [](auto a, auto b) { return a.real() > b.real(); });
    double worst = pieces.size() == full.size() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < std::min(pieces.size(), full.size()); ++i) {
      worst = std::max(worst, std::abs(pieces[i] - full[i].lambda));
    }
    out.push_back(make_check("block_decoupling", worst <= 1e-10,
                             fmt::format("max |full - blockwise| {:.3e} over {} blocks", worst, blocks.size())));
  }
  {
    const int many = std::max(2, threads > 0 ? threads : default_thread_count());
    const auto serial = assemble(basis, config.medium, k, config.quadrature, 1);
    const auto parallel = assemble(basis, config.medium, k, config.quadrature, many);
    bool same = bit_equal(serial.A, parallel.A) && bit_equal(serial.A, sys.A);
    const auto again = solve_spectrum(serial);
    same = same && again.size() == spectrum.size();
    for (std::size_t i = 0; same && i < again.size(); ++i) {
      same = std::memcmp(&again[i].lambda, &spectrum[i].lambda, sizeof(std::complex<double>)) == 0;
    }
    out.push_back(make_check("determinism", same,
                             fmt::format("assembly with 1 and {} threads and repeated solves {}", many,
                                         same ? "bit-identical" : "differ")));
  }
  return report;
}

}  // namespace steklov
