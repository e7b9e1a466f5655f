#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "steklov/config.hpp"
#include "steklov/eigensolve.hpp"
#include "steklov/inverse.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = steklov::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string config_path(const std::string& name) {
  return (std::filesystem::path(STEKLOV_TEST_CONFIG_DIR) / name).string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class TempFile {
 public:
  explicit TempFile(const std::string& name, const std::string& content = {})
      : path_(std::filesystem::temp_directory_path() / name) {
    if (!content.empty()) std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, OracleSov) {
  const auto r = run({"oracle", "sov", "--k", "1", "--n", "2", "--m", "0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1.37710535017429\n");
  const auto c = run({"oracle", "sov", "--n", "2+i"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.substr(0, 7), "1.17422");
  EXPECT_EQ(run({"oracle", "sov", "--n", "2", "--first"}).out, "1.37710535017429\n");
}

TEST(Cli, OracleAsymAndAnnulus) {
  const auto a = run({"oracle", "asym", "--n1", "0.41421356", "--rho", "0.5"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_NEAR(std::stod(a.out), 0.700080915004306, 1e-8);
  const auto b = run({"oracle", "annulus", "--n", "2", "--rho", "0.5"});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_NEAR(std::stod(b.out), 0.808902334154384, 1e-9);
  EXPECT_EQ(run({"oracle", "asym", "--rho", "0.5"}).code, steklov::cli::kConfigError);  // --n1 required
  EXPECT_EQ(run({"oracle", "annulus", "--n", "2+i"}).code, steklov::cli::kConfigError);
}

TEST(Cli, EstimateFromLambda) {
  const auto r = run({"estimate", "--lambda1", "0.575080915", "--k", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc.at("n_approx").get<double>(), 1.0, 1e-6);
  EXPECT_TRUE(doc.at("n_approx2").is_null());
}

TEST(Cli, EstimateTwoStepFromConfig) {
  const auto path = config_path("variable_half.json");
  const auto r = run({"estimate", "--config", path, "--two-step"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto c = steklov::load_config(path);
  const double lambda1 = steklov::solve_spectrum(
      steklov::assemble(steklov::build_basis(c.basis), c.medium, c.wavenumber, c.quadrature))[0].lambda.real();
  EXPECT_EQ(doc.at("lambda_target").get<double>(), lambda1);
  const auto expected = steklov::estimate_two_step(lambda1, 1.0, c.medium);
  EXPECT_NEAR(doc.at("n_approx2").get<double>(), *expected.n_approx2, 1e-12);
  EXPECT_GT(doc.at("n_approx2").get<double>(), doc.at("n_approx").get<double>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, steklov::cli::kConfigError);
  EXPECT_EQ(run({"frobnicate"}).code, steklov::cli::kConfigError);
  EXPECT_EQ(run({"eigen", "--config", config_path("invalid_unknown_key.json")}).code, steklov::cli::kConfigError);
  const auto parse = run({"eigen", "--config", config_path("invalid_expression.json")});
  EXPECT_EQ(parse.code, steklov::cli::kConfigError);
  EXPECT_NE(parse.err.find("offset 3"), std::string::npos) << parse.err;
  EXPECT_EQ(run({"oracle", "sov", "--n", "2", "--k", "-1"}).code, steklov::cli::kConfigError);
  EXPECT_EQ(run({"estimate", "--lambda1", "25", "--n-lo", "6", "--n-hi", "7"}).code, steklov::cli::kBracketError);

  // k at the second root of J_0' with n = 1 makes A singular.
  TempFile singular("steklov_cli_singular.json",
                    R"({"wavenumber": 3.8317059702075125, "medium": {"type": "constant", "value": 1}})");
  const auto r = run({"eigen", "--config", singular.path()});
  EXPECT_EQ(r.code, steklov::cli::kNumericalError);
  EXPECT_NE(r.err.find("numerical error"), std::string::npos) << r.err;
}

TEST(Cli, PrintConfigRoundTrips) {
  const auto r = run({"eigen", "--config", config_path("pear.json"), "--print-config"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto echoed = steklov::parse_config_text(r.out);
  EXPECT_EQ(steklov::to_json(echoed), steklov::to_json(steklov::load_config(config_path("pear.json"))));
}

TEST(Cli, EigenSpectrumCsvAndJson) {
  const auto csv = run({"eigen", "--config", config_path("constant_n2.json"), "--num-eigs", "2"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  const auto l = lines(csv.out);
  ASSERT_EQ(l.size(), 3U);
  EXPECT_EQ(l[0], "index,lambda_re,lambda_im,residual");
  EXPECT_EQ(l[1].substr(0, 12), "1,1.30066026");
  const auto json = run({"eigen", "--config", config_path("absorbing_n2i.json"), "--format", "json"});
  ASSERT_EQ(json.code, 0) << json.err;
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc.at("eigenvalues").size(), 5U);
  EXPECT_NEAR(doc.at("eigenvalues")[0].at("lambda_im").get<double>(), 0.83424, 1e-4);
}

TEST(Cli, EigenDumpsMatrices) {
  TempFile a("steklov_cli_dump_A.txt");
  TempFile b("steklov_cli_dump_B.txt");
  const auto prefix = (std::filesystem::temp_directory_path() / "steklov_cli_dump").string();
  const auto r = run({"eigen", "--config", config_path("constant_n2.json"), "--dump-matrices", prefix});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(a.path());
  std::string first;
  std::getline(in, first);
  std::istringstream row(first);
  int entries = 0;
  for (std::string entry; row >> entry;) ++entries;
  EXPECT_EQ(entries, 25);
  EXPECT_TRUE(std::filesystem::exists(b.path()));
}

TEST(Cli, ConvergeTableAndSlope) {
  EXPECT_EQ(run({"converge", "--n-values", "5,10"}).code, steklov::cli::kConfigError);  // --config required
  const auto r = run({"converge", "--config", config_path("constant_n2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 5U);
  EXPECT_EQ(l[0], "N,lambda_re,lambda_im,rel_error");
  EXPECT_EQ(l[1].substr(0, 3), "10,");
  EXPECT_NE(r.err.find("log-log slope"), std::string::npos);
  const auto boundary = run({"converge", "--config", config_path("constant_n2.json"), "--boundary"});
  ASSERT_EQ(boundary.code, 0) << boundary.err;
  EXPECT_EQ(lines(boundary.out)[0], "N,l2_boundary_error");
  const auto custom = run({"converge", "--config", config_path("constant_n2.json"), "--n-values", "5,10"});
  ASSERT_EQ(custom.code, 0) << custom.err;
  EXPECT_EQ(lines(custom.out).size(), 3U);
}

TEST(Cli, ConvergeWritesToOutputPath) {
  TempFile file("steklov_cli_converge.csv");
  const auto r = run({"converge", "--config", config_path("constant_n2.json"), "--n-values", "10,25", "-o", file.path()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(file.path());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "N,lambda_re,lambda_im,rel_error");
}

TEST(Cli, FieldGrid) {
  const auto r = run({"field", "--config", config_path("disk_half.json"), "--grid", "11"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 1U + 11U * 11U);
  EXPECT_EQ(l[0], "x,y,re,im");
  EXPECT_EQ(l[1], "-1,-1,,");
  EXPECT_EQ(run({"field", "--eig-index", "99"}).code, steklov::cli::kConfigError);
}

TEST(Cli, ValidateAndProject) {
  const auto v = run({"validate"});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("0 failed"), std::string::npos);
  const auto p = run({"project", "--function", "basis:3", "--n-values", "3,5"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(lines(p.out)[0], "N,l2_error,h1_error");
  EXPECT_EQ(run({"project", "--function", "gaussian"}).code, steklov::cli::kConfigError);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE((r.out + r.err).find("oracle"), std::string::npos);
}
