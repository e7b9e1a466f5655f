#include "steklov/output.hpp"

#include <fmt/format.h>

namespace steklov {

using nlohmann::json;

std::string format_real(double value, int digits) {
  // Print a negative zero as "0".
  return fmt::format("{:.{}g}", value == 0.0 ? 0.0 : value, digits);
}

std::string format_complex(std::complex<double> value, int digits) {
  const double re = value.real() == 0.0 ? 0.0 : value.real();
  const double im = value.imag() == 0.0 ? 0.0 : value.imag();
  return fmt::format("{:.{}g}{:+.{}g}i", re, digits, im, digits);
}

void write_convergence_csv(std::ostream& out, const ConvergenceTable& table) {
  out << "N,lambda_re,lambda_im,rel_error\n";
  for (const auto& row : table.rows) {
    out << row.N << ',' << format_real(row.lambda.real()) << ',' << format_real(row.lambda.imag()) << ','
        << (row.rel_error ? format_real(*row.rel_error) : std::string()) << '\n';
  }
}

void write_projection_csv(std::ostream& out, const ProjectionStudy& study) {
  out << "N,l2_error,h1_error\n";
  for (const auto& row : study.rows) {
    out << row.N << ',' << format_real(row.l2_error) << ',' << format_real(row.h1_error) << '\n';
  }
}

void write_boundary_csv(std::ostream& out, const std::vector<BoundaryErrorRow>& rows) {
  out << "N,l2_boundary_error\n";
  for (const auto& row : rows) out << row.N << ',' << format_real(row.l2_boundary_error) << '\n';
}

void write_field_csv(std::ostream& out, const FieldGrid& grid) {
  out << "x,y,re,im\n";
  for (const auto& s : grid.samples) {
    out << format_real(s.x, 12) << ',' << format_real(s.y, 12) << ',';
    if (s.value) out << format_real(s.value->real(), 12) << ',' << format_real(s.value->imag(), 12);
    else out << ',';
    out << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const SteklovSpectrum& spectrum, std::size_t count) {
  out << "index,lambda_re,lambda_im,residual\n";
  for (std::size_t i = 0; i < std::min(count, spectrum.size()); ++i) {
    out << i + 1 << ',' << format_real(spectrum[i].lambda.real()) << ',' << format_real(spectrum[i].lambda.imag())
        << ',' << format_real(spectrum[i].residual, 6) << '\n';
  }
}

void write_matrix(std::ostream& out, const Eigen::MatrixXcd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_complex(m(i, j), 17);
    }
    out << '\n';
  }
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) { write_matrix(out, Eigen::MatrixXcd(m.cast<std::complex<double>>())); }

void write_report(std::ostream& out, const ValidationReport& report) {
  for (const auto& c : report.checks) out << to_string(c.status) << ' ' << c.name << ": " << c.detail << '\n';
  out << fmt::format("{} checks, {} failed\n", report.checks.size(), report.failures());
}

json to_json(const ConvergenceTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"N", row.N},
                    {"lambda_re", row.lambda.real()},
                    {"lambda_im", row.lambda.imag()},
                    {"rel_error", row.rel_error ? json(*row.rel_error) : json(nullptr)}});
  }
  json doc{{"rows", rows}};
  if (table.exact) doc["exact"] = {{"re", table.exact->real()}, {"im", table.exact->imag()}};
  if (table.slope) doc["slope"] = *table.slope;
  return doc;
}

json to_json(const ProjectionStudy& study) {
  json rows = json::array();
  for (const auto& row : study.rows) rows.push_back({{"N", row.N}, {"l2_error", row.l2_error}, {"h1_error", row.h1_error}});
  return json{{"function", study.function_id},
              {"rows", rows},
              {"l2_slope", study.l2_slope ? json(*study.l2_slope) : json(nullptr)},
              {"h1_slope", study.h1_slope ? json(*study.h1_slope) : json(nullptr)},
              {"reference_size", study.reference_size},
              {"tail_fraction", study.tail_fraction}};
}

json to_json(const std::vector<BoundaryErrorRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back({{"N", row.N}, {"l2_boundary_error", row.l2_boundary_error}});
  return json{{"rows", out}};
}

json to_json(const SteklovSpectrum& spectrum, std::size_t count) {
  json values = json::array();
  for (std::size_t i = 0; i < std::min(count, spectrum.size()); ++i) {
    values.push_back({{"index", i + 1},
                      {"lambda_re", spectrum[i].lambda.real()},
                      {"lambda_im", spectrum[i].lambda.imag()},
                      {"residual", spectrum[i].residual}});
  }
  return json{{"eigenvalues", values}, {"condition", spectrum.condition}};
}

json to_json(const EstimationResult& result) {
  return json{{"lambda_target", result.lambda_target},
              {"n_approx", result.n_approx},
              {"n_approx2", result.n_approx2 ? json(*result.n_approx2) : json(nullptr)},
              {"iterations", result.iterations},
              {"residual", result.residual}};
}

json to_json(const ValidationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  return json{{"checks", checks}, {"failures", report.failures()}};
}

}  // namespace steklov
