#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "steklov/diskbasis.hpp"
#include "steklov/medium.hpp"
#include "steklov/quadrature.hpp"

namespace steklov {

enum class OutputFormat { csv, json };

struct OutputSpec {
  OutputFormat format = OutputFormat::csv;
  std::string path;  // empty: standard output
};

/// Everything a run needs: wavenumber, basis, quadrature, medium, outputs.
///
/// JSON layout (every key optional except "medium"; unknown keys rejected):
///   {"wavenumber": 1,
///    "basis": {"p_max": 4, "q_max": 5, "include_sin": false, "truncation": 25,
///              "ordering": "q_major"},
///    "quadrature": {"radial_points": 64, "angular_points": 256,
///                   "angular_rule": "trapezoid", "split_at_interface": true},
///    "medium": {"type": "constant", "value": {"re": 2, "im": 1}},
///    "outputs": {"format": "csv", "path": "out.csv"}}
/// Medium types: constant{value}, disk{radius, inner, outer},
/// polar{rho, inner, outer}, expression{expr}. Complex values are numbers,
/// {"re", "im"} objects, or expression strings; inner/outer strings may
/// depend on r, theta, x, y.
struct RunConfig {
  double wavenumber = 1.0;
  BasisSpec basis;
  QuadratureRule quadrature;
  MediumProfile medium = constant_medium(2.0);
  OutputSpec outputs;
};

/// Validates and converts a JSON document. Throws ConfigError (ParseError
/// for malformed expressions) on any schema violation.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Canonical JSON form; parse_config(to_json(c)) reproduces c.
nlohmann::json to_json(const RunConfig& config);
nlohmann::json medium_to_json(const MediumProfile& medium);
MediumProfile medium_from_json(const nlohmann::json& doc);

}  // namespace steklov
