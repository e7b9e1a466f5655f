#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "steklov/assembly.hpp"
#include "steklov/config.hpp"
#include "steklov/eigensolve.hpp"
#include "steklov/error.hpp"
#include "steklov/harness.hpp"
#include "steklov/inverse.hpp"
#include "steklov/oracles.hpp"
#include "steklov/output.hpp"

namespace steklov::cli {
namespace {

struct Options {
  int threads = 0;
  std::string config_path;
  bool print_config = false;
  std::string output;  // overrides outputs.path
  std::string format;  // overrides outputs.format

  int num_eigs = -1;
  std::string dump_prefix;

  std::vector<int> n_values{10, 15, 20, 25};
  bool boundary = false;

  std::optional<double> lambda1;
  std::optional<double> k;
  bool two_step = false;
  double n_lo = 1.0001;
  double n_hi = 25.0;

  int eig_index = 1;
  int grid = 101;

  std::string function_id = "bump";
  bool include_sin = false;

  // oracle parameters
  std::string n_text = "2";
  double n1 = 0.0;
  double rho = 0.5;
  int m = 0;
  bool first = false;
};

/// Destination chosen from --output or the configuration.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError(fmt::format("cannot open output file '{}'", path));
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

 private:
  std::ostream& fallback_;
  std::ofstream file_;
};

std::complex<double> parse_constant(const std::string& text, const std::string& what) {
  const auto e = parse_expression(text);
  if (!e.is_constant()) throw ConfigError(fmt::format("{} must be a constant, got '{}'", what, text));
  return e.eval({});
}

std::string format_value(std::complex<double> z) {
  return z.imag() == 0.0 ? format_real(z.real()) : format_complex(z);
}

struct Context {
  Options& opt;
  std::ostream& out;
  std::ostream& err;

  RunConfig config() const {
    RunConfig c = opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
    if (!opt.format.empty()) {
      if (opt.format == "csv") c.outputs.format = OutputFormat::csv;
      else if (opt.format == "json") c.outputs.format = OutputFormat::json;
      else throw ConfigError(fmt::format("unknown output format '{}'", opt.format));
    }
    if (!opt.output.empty()) c.outputs.path = opt.output;
    return c;
  }

  // Returns true when the command only had to echo its configuration.
  bool echo_config(const RunConfig& c) const {
    if (!opt.print_config) return false;
    out << to_json(c).dump(2) << '\n';
    return true;
  }

  void emit(const RunConfig& c, const std::function<void(std::ostream&)>& csv, const nlohmann::json& json) const {
    Sink sink(out, c.outputs.path);
    if (c.outputs.format == OutputFormat::csv) csv(sink.stream());
    else sink.stream() << json.dump(2) << '\n';
  }
};

int cmd_eigen(const Context& ctx) {
  const auto c = ctx.config();
  if (ctx.echo_config(c)) return kOk;
  const auto sys = assemble(build_basis(c.basis), c.medium, c.wavenumber, c.quadrature, ctx.opt.threads);
  if (!ctx.opt.dump_prefix.empty()) {
    std::ofstream a(ctx.opt.dump_prefix + "_A.txt");
    std::ofstream b(ctx.opt.dump_prefix + "_B.txt");
    if (!a || !b) throw ConfigError(fmt::format("cannot write matrices with prefix '{}'", ctx.opt.dump_prefix));
    write_matrix(a, sys.A);
    write_matrix(b, sys.B);
  }
  const auto spectrum = solve_spectrum(sys);
  const auto count = ctx.opt.num_eigs < 0 ? spectrum.size() : static_cast<std::size_t>(ctx.opt.num_eigs);
  ctx.emit(c, [&](std::ostream& s) { write_spectrum_csv(s, spectrum, count); }, to_json(spectrum, count));
  return kOk;
}

int cmd_converge(const Context& ctx) {
  const auto c = ctx.config();
  if (ctx.echo_config(c)) return kOk;
  if (ctx.opt.boundary) {
    const auto rows = boundary_eigenfunction_error(c, ctx.opt.n_values, ctx.opt.threads);
    ctx.emit(c, [&](std::ostream& s) { write_boundary_csv(s, rows); }, to_json(rows));
    return kOk;
  }
  const auto table = convergence_study(c, ctx.opt.n_values, ctx.opt.threads);
  ctx.emit(c, [&](std::ostream& s) { write_convergence_csv(s, table); }, to_json(table));
  if (table.slope) ctx.err << "log-log slope: " << format_real(*table.slope, 6) << '\n';
  return kOk;
}

int cmd_estimate(const Context& ctx) {
  std::optional<RunConfig> c;
  if (!ctx.opt.config_path.empty()) {
    c = ctx.config();
    if (ctx.echo_config(*c)) return kOk;
  }
  const double k = ctx.opt.k ? *ctx.opt.k : (c ? c->wavenumber : 1.0);
  double lambda1 = 0.0;
  if (ctx.opt.lambda1) {
    lambda1 = *ctx.opt.lambda1;
  } else {
    if (!c) throw ConfigError("estimate needs --lambda1 or a --config to compute it from");
    auto run = *c;
    run.wavenumber = k;
    const auto spectrum = solve_spectrum(
        assemble(build_basis(run.basis), run.medium, run.wavenumber, run.quadrature, ctx.opt.threads));
    if (spectrum.size() == 0) throw NumericalError("the pencil has no finite eigenvalue");
    lambda1 = spectrum[0].lambda.real();
  }
  std::optional<MediumProfile> geometry;
  if (ctx.opt.two_step) geometry = c ? c->medium : constant_medium(1.0);
  const auto result = estimate_two_step(lambda1, k, geometry, Bracket{ctx.opt.n_lo, ctx.opt.n_hi});
  Sink sink(ctx.out, c ? c->outputs.path : ctx.opt.output);
  sink.stream() << to_json(result).dump(2) << '\n';
  return kOk;
}

int cmd_field(const Context& ctx) {
  const auto c = ctx.config();
  if (ctx.echo_config(c)) return kOk;
  const auto basis = build_basis(c.basis);
  const auto spectrum = solve_spectrum(assemble(basis, c.medium, c.wavenumber, c.quadrature, ctx.opt.threads));
  const auto grid = eigenfunction_field(spectrum, basis, ctx.opt.eig_index, ctx.opt.grid);
  Sink sink(ctx.out, c.outputs.path);
  write_field_csv(sink.stream(), grid);
  return kOk;
}

int cmd_validate(const Context& ctx) {
  const auto c = ctx.config();
  if (ctx.echo_config(c)) return kOk;
  const auto report = validate(c, ctx.opt.threads);
  Sink sink(ctx.out, c.outputs.path);
  if (c.outputs.format == OutputFormat::json) sink.stream() << to_json(report).dump(2) << '\n';
  else write_report(sink.stream(), report);
  return report.passed() ? kOk : kValidationFailed;
}

int cmd_project(const Context& ctx) {
  const auto study = projection_rate_study(ctx.opt.function_id, ctx.opt.n_values, ctx.opt.include_sin, ctx.opt.threads);
  Sink sink(ctx.out, ctx.opt.output);
  if (ctx.opt.format == "json") sink.stream() << to_json(study).dump(2) << '\n';
  else write_projection_csv(sink.stream(), study);
  if (study.l2_slope) ctx.err << "L2 slope: " << format_real(*study.l2_slope, 6) << '\n';
  if (study.h1_slope) ctx.err << "H1 slope: " << format_real(*study.h1_slope, 6) << '\n';
  return kOk;
}

int cmd_oracle(const Context& ctx, const std::string& which) {
  const double k = ctx.opt.k.value_or(1.0);
  if (which == "sov") {
    const auto n = parse_constant(ctx.opt.n_text, "--n");
    const auto value = ctx.opt.first ? sov_first(k, n).lambda : sov_eigenvalue(k, n, ctx.opt.m);
    ctx.out << format_value(value) << '\n';
  } else if (which == "asym") {
    ctx.out << format_real(asym_first(k, ctx.opt.n1, ctx.opt.rho)) << '\n';
  } else {
    const auto n = parse_constant(ctx.opt.n_text, "--n");
    if (n.imag() != 0.0) throw DomainError("the layered-disk oracle needs a real inner index");
    ctx.out << format_real(annulus_exact(k, n.real(), ctx.opt.rho, ctx.opt.m)) << '\n';
  }
  return kOk;
}

void add_config_options(CLI::App* sub, Options& opt, bool required) {
  auto* o = sub->add_option("-c,--config", opt.config_path, "Run configuration (JSON)");
  if (required) o->required();
  o->check(CLI::ExistingFile);
  sub->add_flag("--print-config", opt.print_config, "Echo the validated configuration and exit");
  sub->add_option("-o,--output", opt.output, "Output path (overrides the configuration)");
  sub->add_option("--format", opt.format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Steklov eigenvalues of the Helmholtz equation on the unit disk"};
  app.name("steklov");
  app.require_subcommand(1);
  app.add_option("--threads", opt.threads, "Worker threads (default: available parallelism)")
      ->check(CLI::NonNegativeNumber);

  auto* eigen = app.add_subcommand("eigen", "Solve for the Steklov eigenvalues of a configuration");
  add_config_options(eigen, opt, true);
  eigen->add_option("--num-eigs", opt.num_eigs, "Number of eigenvalues to report")->check(CLI::NonNegativeNumber);
  eigen->add_option("--dump-matrices", opt.dump_prefix, "Write PREFIX_A.txt and PREFIX_B.txt");

  auto* converge = app.add_subcommand("converge", "Leading eigenvalue against the truncation N");
  add_config_options(converge, opt, true);
  converge->add_option("--n-values", opt.n_values, "Comma-separated truncations")->delimiter(',');
  converge->add_flag("--boundary", opt.boundary, "Report boundary eigenfunction errors instead");

  auto* estimate = app.add_subcommand("estimate", "Estimate the refractive index from lambda_1");
  add_config_options(estimate, opt, false);
  estimate->add_option("--lambda1", opt.lambda1, "Leading eigenvalue (default: computed from --config)");
  estimate->add_option("--k", opt.k, "Wavenumber (default: from --config, else 1)");
  estimate->add_flag("--two-step", opt.two_step, "Apply the inclusion-area correction");
  estimate->add_option("--n-lo", opt.n_lo, "Lower end of the index bracket");
  estimate->add_option("--n-hi", opt.n_hi, "Upper end of the index bracket");

  auto* field = app.add_subcommand("field", "Sample an eigenfunction on a Cartesian grid");
  add_config_options(field, opt, true);
  field->add_option("--eig-index", opt.eig_index, "1-based eigenvalue index");
  field->add_option("--grid", opt.grid, "Grid points per axis");

  auto* oracle = app.add_subcommand("oracle", "Closed-form reference eigenvalues");
  oracle->require_subcommand(1);
  auto* sov = oracle->add_subcommand("sov", "Constant medium, separation of variables");
  sov->add_option("--k", opt.k, "Wavenumber");
  sov->add_option("--n", opt.n_text, "Refractive index, e.g. 2 or 2+i");
  sov->add_option("--m", opt.m, "Angular order")->check(CLI::NonNegativeNumber);
  sov->add_flag("--first", opt.first, "Largest real part over m = 0..10");
  auto* asym = oracle->add_subcommand("asym", "Small-inclusion two-term expansion");
  asym->add_option("--k", opt.k, "Wavenumber");
  asym->add_option("--n1", opt.n1, "Inner index n = (1 + n1)^2")->required();
  asym->add_option("--rho", opt.rho, "Inclusion radius");
  auto* annulus = oracle->add_subcommand("annulus", "Disk inclusion, interface matching");
  annulus->add_option("--k", opt.k, "Wavenumber");
  annulus->add_option("--n", opt.n_text, "Inner refractive index");
  annulus->add_option("--rho", opt.rho, "Inclusion radius");
  annulus->add_option("--m", opt.m, "Angular order")->check(CLI::NonNegativeNumber);

  auto* validate_cmd = app.add_subcommand("validate", "Run the invariant checks");
  add_config_options(validate_cmd, opt, false);

  auto* project = app.add_subcommand("project", "Projection-error rates of a test function");
  project->add_option("--n-values", opt.n_values, "Comma-separated truncations")->delimiter(',');
  project->add_option("--function", opt.function_id, "bump or basis:J");
  project->add_flag("--include-sin", opt.include_sin, "Include sine modes in the basis");
  project->add_option("-o,--output", opt.output, "Output path");
  project->add_option("--format", opt.format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  const Context ctx{opt, out, err};
  try {
    if (eigen->parsed()) return cmd_eigen(ctx);
    if (converge->parsed()) return cmd_converge(ctx);
    if (estimate->parsed()) return cmd_estimate(ctx);
    if (field->parsed()) return cmd_field(ctx);
    if (validate_cmd->parsed()) return cmd_validate(ctx);
    if (project->parsed()) return cmd_project(ctx);
    if (sov->parsed()) return cmd_oracle(ctx, "sov");
    if (asym->parsed()) return cmd_oracle(ctx, "asym");
    if (annulus->parsed()) return cmd_oracle(ctx, "annulus");
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kConfigError;
  } catch (const BracketError& e) {
    err << "estimation error: " << e.what() << '\n';
    return kBracketError;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalError;
  }
  return kConfigError;
}

}  // namespace steklov::cli
