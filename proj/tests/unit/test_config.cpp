#include <gtest/gtest.h>

#include <filesystem>

#include "steklov/config.hpp"
#include "steklov/error.hpp"

using namespace steklov;

namespace {

std::filesystem::path config_path(const std::string& name) {
  return std::filesystem::path(STEKLOV_TEST_CONFIG_DIR) / name;
}

}  // namespace

TEST(ParseConfig, DefaultsWhenOnlyMediumIsGiven) {
  const auto c = parse_config_text(R"({"medium": {"type": "constant", "value": 2}})");
  EXPECT_EQ(c.wavenumber, 1.0);
  EXPECT_EQ(c.basis, BasisSpec{});
  EXPECT_EQ(c.basis.truncation, 25);
  EXPECT_EQ(c.quadrature.radial_points, 64);
  EXPECT_EQ(c.quadrature.angular_points, 256);
  EXPECT_TRUE(c.quadrature.split_at_interface);
  EXPECT_EQ(c.outputs.format, OutputFormat::csv);
  EXPECT_TRUE(c.outputs.path.empty());
  ASSERT_TRUE(std::holds_alternative<ConstantMedium>(c.medium.value()));
}

TEST(ParseConfig, ShippedConfigsLoad) {
  for (const char* name : {"constant_n2.json", "absorbing_n2i.json", "disk_half.json",
                           "variable_full.json", "variable_half.json", "pear.json",
                           "ellipse.json", "rounded_square.json", "pear_gauss12.json",
                           "near_resonance.json"}) {
    EXPECT_NO_THROW(load_config(config_path(name))) << name;
  }
  const auto absorbing = load_config(config_path("absorbing_n2i.json"));
  const auto& value = std::get<ConstantMedium>(absorbing.medium.value()).value;
  EXPECT_EQ(value, std::complex<double>(2.0, 1.0));
  const auto half = load_config(config_path("disk_half.json"));
  EXPECT_EQ(std::get<DiskInclusion>(half.medium.value()).radius, 0.5);
  const auto gauss = load_config(config_path("pear_gauss12.json"));
  EXPECT_EQ(gauss.quadrature.angular_rule, AngularRule::gauss_legendre);
  EXPECT_FALSE(gauss.quadrature.split_at_interface);
}

TEST(ParseConfig, RejectsUnknownKeys) {
  EXPECT_THROW(load_config(config_path("invalid_unknown_key.json")), ConfigError);
  try {
    parse_config_text(R"({"medium": {"type": "constant", "value": 2}, "solver": "qz"})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("solver"), std::string::npos);
  }
  EXPECT_THROW(parse_config_text(R"({"medium": {"type": "constant", "value": 2, "radius": 1}})"), ConfigError);
  EXPECT_THROW(parse_config_text(R"({"basis": {"pmax": 3}, "medium": {"type": "constant", "value": 2}})"),
               ConfigError);
}

TEST(ParseConfig, MalformedExpressionReportsOffset) {
  try {
    load_config(config_path("invalid_expression.json"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3U);
  }
}

TEST(ParseConfig, SchemaViolations) {
  EXPECT_THROW(parse_config_text("{"), ConfigError);
  EXPECT_THROW(parse_config_text("[]"), ConfigError);
  EXPECT_THROW(parse_config_text("{}"), ConfigError);
  EXPECT_THROW(parse_config_text(R"({"wavenumber": 0, "medium": {"type": "constant", "value": 2}})"), ConfigError);
  EXPECT_THROW(parse_config_text(R"({"wavenumber": "1", "medium": {"type": "constant", "value": 2}})"), ConfigError);
  EXPECT_THROW(parse_config_text(R"({"medium": {"type": "constant", "value": "2+r"}})"), ConfigError);
  EXPECT_THROW(parse_config_text(R"({"medium": {"type": "disk", "radius": 1.5, "inner": 2}})"), ConfigError);
  EXPECT_THROW(parse_config_text(R"({"medium": {"type": "slab"}})"), ConfigError);
  EXPECT_THROW(parse_config_text(R"({"basis": {"truncation": 0}, "medium": {"type": "constant", "value": 2}})"),
               ConfigError);
  EXPECT_THROW(parse_config_text(R"({"basis": {"truncation": 2.5}, "medium": {"type": "constant", "value": 2}})"),
               ConfigError);
  EXPECT_THROW(parse_config_text(R"({"basis": {"ordering": "random"}, "medium": {"type": "constant", "value": 2}})"),
               ConfigError);
  EXPECT_THROW(parse_config_text(R"({"outputs": {"format": "xml"}, "medium": {"type": "constant", "value": 2}})"),
               ConfigError);
  EXPECT_THROW(load_config(config_path("does_not_exist.json")), ConfigError);
}

TEST(ParseConfig, RoundTripThroughJson) {
  for (const char* name : {"constant_n2.json", "absorbing_n2i.json", "disk_half.json",
                           "variable_full.json", "variable_half.json", "pear.json",
                           "rounded_square.json", "pear_gauss12.json"}) {
    const auto original = load_config(config_path(name));
    const auto doc = to_json(original);
    const auto again = parse_config(doc);
    EXPECT_EQ(to_json(again), doc) << name;
    EXPECT_EQ(again.basis, original.basis) << name;
    EXPECT_EQ(again.wavenumber, original.wavenumber) << name;
  }
}

TEST(ParseConfig, RoundTripPreservesMediumValues) {
  const auto c = load_config(config_path("pear.json"));
  const auto again = parse_config(to_json(c));
  for (double r : {0.1, 0.5, 0.61, 0.9}) {
    for (double theta : {0.0, 1.0, 2.5}) {
      EXPECT_EQ(eval_medium(c.medium, r, theta), eval_medium(again.medium, r, theta));
    }
  }
}

TEST(ParseConfig, ComplexValueForms) {
  const auto a = parse_config_text(R"({"medium": {"type": "constant", "value": {"re": 2, "im": 0.5}}})");
  EXPECT_EQ(std::get<ConstantMedium>(a.medium.value()).value, std::complex<double>(2.0, 0.5));
  const auto b = parse_config_text(R"({"medium": {"type": "constant", "value": "2+0.5*i"}})");
  EXPECT_EQ(std::get<ConstantMedium>(b.medium.value()).value, std::complex<double>(2.0, 0.5));
  EXPECT_THROW(parse_config_text(R"({"medium": {"type": "constant", "value": {"im": 1}}})"), ConfigError);
  EXPECT_THROW(parse_config_text(R"({"medium": {"type": "constant", "value": {"re": 1, "x": 1}}})"), ConfigError);
}
