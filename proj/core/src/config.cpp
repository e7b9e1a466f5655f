#include "steklov/config.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "steklov/error.hpp"

namespace steklov {
namespace {

using nlohmann::json;

void require_object(const json& doc, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!doc.is_object()) throw ConfigError(fmt::format("{} must be an object", where));
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const auto a : allowed) known = known || key == a;
    if (!known) throw ConfigError(fmt::format("unknown key '{}' in {}", key, where));
  }
}

double get_number(const json& doc, std::string_view key, std::string_view where) {
  const auto& v = doc.at(std::string(key));
  if (!v.is_number()) throw ConfigError(fmt::format("{}.{} must be a number", where, key));
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(fmt::format("{}.{} must be finite", where, key));
  return x;
}

int get_int(const json& doc, std::string_view key, std::string_view where) {
  const auto& v = doc.at(std::string(key));
  if (!v.is_number_integer()) throw ConfigError(fmt::format("{}.{} must be an integer", where, key));
  return v.get<int>();
}

bool get_bool(const json& doc, std::string_view key, std::string_view where) {
  const auto& v = doc.at(std::string(key));
  if (!v.is_boolean()) throw ConfigError(fmt::format("{}.{} must be a boolean", where, key));
  return v.get<bool>();
}

std::string get_string(const json& doc, std::string_view key, std::string_view where) {
  const auto& v = doc.at(std::string(key));
  if (!v.is_string()) throw ConfigError(fmt::format("{}.{} must be a string", where, key));
  return v.get<std::string>();
}

json complex_to_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

/// Number, {"re", "im"} object, or expression string.
Expr value_expr(const json& v, std::string_view where, bool allow_rational = false) {
  if (v.is_number()) {
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(fmt::format("{} must be finite", where));
    return Expr::constant(x);
  }
  if (v.is_object()) {
    require_object(v, where, {"re", "im"});
    if (!v.contains("re")) throw ConfigError(fmt::format("{} is missing 're'", where));
    const double re = get_number(v, "re", where);
    const double im = v.contains("im") ? get_number(v, "im", where) : 0.0;
    return Expr::constant({re, im});
  }
  if (v.is_string()) return parse_expression(v.get<std::string>(), {.allow_rational_powers = allow_rational});
  throw ConfigError(fmt::format("{} must be a number, a {{\"re\", \"im\"}} object or an expression", where));
}

json expr_to_json(const Expr& e) {
  if (e.is_constant()) return complex_to_json(e.eval({}));
  return e.to_string();
}

const json& require_key(const json& doc, std::string_view key, std::string_view where) {
  if (!doc.contains(std::string(key))) throw ConfigError(fmt::format("{} is missing '{}'", where, key));
  return doc.at(std::string(key));
}

}  // namespace

MediumProfile medium_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string()) {
    throw ConfigError("medium must be an object with a string 'type'");
  }
  const auto type = doc.at("type").get<std::string>();
  if (type == "constant") {
    require_object(doc, "medium", {"type", "value"});
    const auto e = value_expr(require_key(doc, "value", "medium"), "medium.value");
    if (!e.is_constant()) throw ConfigError("medium.value of a constant medium must not depend on position");
    return ConstantMedium{e.eval({})};
  }
  if (type == "disk") {
    require_object(doc, "medium", {"type", "radius", "inner", "outer"});
    DiskInclusion d;
    require_key(doc, "radius", "medium");
    d.radius = get_number(doc, "radius", "medium");
    if (!(d.radius > 0.0 && d.radius < 1.0)) throw ConfigError("medium.radius must lie in (0, 1)");
    d.inner = value_expr(require_key(doc, "inner", "medium"), "medium.inner");
    d.outer = doc.contains("outer") ? value_expr(doc.at("outer"), "medium.outer") : Expr::constant(1.0);
    return d;
  }
  if (type == "polar") {
    require_object(doc, "medium", {"type", "rho", "inner", "outer"});
    PolarInclusion p;
    require_key(doc, "rho", "medium");
    p.rho = parse_expression(get_string(doc, "rho", "medium"), {.allow_rational_powers = true});
    p.inner = value_expr(require_key(doc, "inner", "medium"), "medium.inner");
    p.outer = doc.contains("outer") ? value_expr(doc.at("outer"), "medium.outer") : Expr::constant(1.0);
    return p;
  }
  if (type == "expression") {
    require_object(doc, "medium", {"type", "expr"});
    require_key(doc, "expr", "medium");
    return ExpressionMedium{parse_expression(get_string(doc, "expr", "medium"))};
  }
  throw ConfigError(fmt::format("unknown medium type '{}'", type));
}

json medium_to_json(const MediumProfile& medium) {
  const auto& v = medium.value();
  if (const auto* c = std::get_if<ConstantMedium>(&v)) return json{{"type", "constant"}, {"value", complex_to_json(c->value)}};
  if (const auto* d = std::get_if<DiskInclusion>(&v)) {
    return json{{"type", "disk"}, {"radius", d->radius}, {"inner", expr_to_json(d->inner)}, {"outer", expr_to_json(d->outer)}};
  }
  if (const auto* p = std::get_if<PolarInclusion>(&v)) {
    return json{{"type", "polar"}, {"rho", p->rho.to_string()}, {"inner", expr_to_json(p->inner)},
                {"outer", expr_to_json(p->outer)}};
  }
  const auto& e = std::get<ExpressionMedium>(v);
  return json{{"type", "expression"}, {"expr", e.expr.to_string()}};
}

RunConfig parse_config(const json& doc) {
  require_object(doc, "config", {"wavenumber", "basis", "quadrature", "medium", "outputs"});
  RunConfig config;
  if (doc.contains("wavenumber")) config.wavenumber = get_number(doc, "wavenumber", "config");
  if (!(config.wavenumber > 0.0)) throw ConfigError("wavenumber must be positive");

  if (doc.contains("basis")) {
    const auto& b = doc.at("basis");
    require_object(b, "basis", {"p_max", "q_max", "include_sin", "truncation", "ordering"});
    if (b.contains("p_max")) config.basis.p_max = get_int(b, "p_max", "basis");
    if (b.contains("q_max")) config.basis.q_max = get_int(b, "q_max", "basis");
    if (b.contains("include_sin")) config.basis.include_sin = get_bool(b, "include_sin", "basis");
    if (b.contains("truncation")) config.basis.truncation = get_int(b, "truncation", "basis");
    if (b.contains("ordering")) config.basis.ordering = parse_ordering(get_string(b, "ordering", "basis"));
  }
  if (config.basis.p_max < 0 || config.basis.q_max < 1) throw ConfigError("basis needs p_max >= 0 and q_max >= 1");
  if (config.basis.truncation < 1) throw ConfigError("basis.truncation must be at least 1");

  if (doc.contains("quadrature")) {
    const auto& q = doc.at("quadrature");
    require_object(q, "quadrature", {"radial_points", "angular_points", "angular_rule", "split_at_interface"});
    if (q.contains("radial_points")) config.quadrature.radial_points = get_int(q, "radial_points", "quadrature");
    if (q.contains("angular_points")) config.quadrature.angular_points = get_int(q, "angular_points", "quadrature");
    if (q.contains("angular_rule")) {
      config.quadrature.angular_rule = parse_angular_rule(get_string(q, "angular_rule", "quadrature"));
    }
    if (q.contains("split_at_interface")) {
      config.quadrature.split_at_interface = get_bool(q, "split_at_interface", "quadrature");
    }
  }
  config.quadrature.validate();

  config.medium = medium_from_json(require_key(doc, "medium", "config"));

  if (doc.contains("outputs")) {
    const auto& o = doc.at("outputs");
    require_object(o, "outputs", {"format", "path"});
    if (o.contains("format")) {
      const auto format = get_string(o, "format", "outputs");
      if (format == "csv") {
        config.outputs.format = OutputFormat::csv;
      } else if (format == "json") {
        config.outputs.format = OutputFormat::json;
      } else {
        throw ConfigError(fmt::format("unknown output format '{}'", format));
      }
    }
    if (o.contains("path")) config.outputs.path = get_string(o, "path", "outputs");
  }
  return config;
}

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("malformed configuration: {}", e.what()));
  }
  return parse_config(doc);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open configuration file '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

json to_json(const RunConfig& config) {
  return json{
      {"wavenumber", config.wavenumber},
      {"basis",
       {{"p_max", config.basis.p_max},
        {"q_max", config.basis.q_max},
        {"include_sin", config.basis.include_sin},
        {"truncation", config.basis.truncation},
        {"ordering", std::string(to_string(config.basis.ordering))}}},
      {"quadrature",
       {{"radial_points", config.quadrature.radial_points},
        {"angular_points", config.quadrature.angular_points},
        {"angular_rule", std::string(to_string(config.quadrature.angular_rule))},
        {"split_at_interface", config.quadrature.split_at_interface}}},
      {"medium", medium_to_json(config.medium)},
      {"outputs",
       {{"format", config.outputs.format == OutputFormat::csv ? "csv" : "json"}, {"path", config.outputs.path}}},
  };
}

}  // namespace steklov
