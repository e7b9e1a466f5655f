#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "steklov/eigensolve.hpp"
#include "steklov/harness.hpp"
#include "steklov/inverse.hpp"

namespace steklov {

/// Locale-independent "%.{digits}g" formatting; negative zero prints as "0".
std::string format_real(double value, int digits = 15);
/// "re+imi" / "re-imi".
std::string format_complex(std::complex<double> value, int digits = 15);

/// "N,lambda_re,lambda_im,rel_error" (rel_error empty without an oracle).
void write_convergence_csv(std::ostream& out, const ConvergenceTable& table);
/// "N,l2_error,h1_error".
void write_projection_csv(std::ostream& out, const ProjectionStudy& study);
/// "N,l2_boundary_error".
void write_boundary_csv(std::ostream& out, const std::vector<BoundaryErrorRow>& rows);
/// "x,y,re,im", with empty re/im outside the disk.
void write_field_csv(std::ostream& out, const FieldGrid& grid);
/// "index,lambda_re,lambda_im,residual" for the first `count` eigenvalues.
void write_spectrum_csv(std::ostream& out, const SteklovSpectrum& spectrum, std::size_t count);
/// One row per line, entries "re+imi" separated by single spaces.
void write_matrix(std::ostream& out, const Eigen::MatrixXcd& m);
void write_matrix(std::ostream& out, const Eigen::MatrixXd& m);
/// "STATUS name: detail" lines followed by a summary line.
void write_report(std::ostream& out, const ValidationReport& report);

nlohmann::json to_json(const ConvergenceTable& table);
nlohmann::json to_json(const ProjectionStudy& study);
nlohmann::json to_json(const std::vector<BoundaryErrorRow>& rows);
nlohmann::json to_json(const SteklovSpectrum& spectrum, std::size_t count);
nlohmann::json to_json(const EstimationResult& result);
nlohmann::json to_json(const ValidationReport& report);

}  // namespace steklov
