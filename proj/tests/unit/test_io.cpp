#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "toric/hilbert.hpp"
#include "toric/io.hpp"

using namespace toric;
using toric::testing::fixture;

TEST(Json, IntegersBeyondInt64AreStrings) {
  const Integer big = Integer(1) << 80;
  const auto j = io::to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(io::integer_from_json(j), big);
  EXPECT_TRUE(io::to_json(Integer(-5)).is_number_integer());
}

TEST(Json, ParseErrorsCarryPosition) {
  try {
    io::parse_json("{\"a\": }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Json, PolynomialRoundTrip) {
  const auto f = parse_polynomial("3*x^2*y - 1/2*z");
  EXPECT_EQ(io::polynomial_from_json(io::polynomial_to_json(f)), f);
}

TEST(Json, ConeAndFanRoundTrip) {
  const auto c = io::cone_from_json(io::read_json_file(fixture("app_b/cone.json")));
  EXPECT_TRUE(io::cone_from_json(io::cone_to_json(c)).same_set(c));
  const auto f = io::fan_from_json(io::read_json_file(fixture("fans/hirzebruch1_standard.json")));
  const auto g = io::fan_from_json(io::fan_to_json(f));
  ASSERT_EQ(g.cones.size(), f.cones.size());
  for (std::size_t i = 0; i < f.cones.size(); ++i) EXPECT_TRUE(g.cones[i].same_set(f.cones[i]));
}

TEST(Json, ScriptRoundTrip) {
  const auto s = io::script_from_json(io::read_json_file(fixture("app_a/stage1.json")));
  ASSERT_EQ(s.size(), 1u);
  ASSERT_EQ(s[0].size(), 3u);
  const auto again = io::script_from_json(io::script_to_json(s));
  EXPECT_EQ(io::script_to_json(again), io::script_to_json(s));
  EXPECT_THROW(io::script_from_json(io::parse_json("[{\"type\":\"blowup\"}]")), ParseError);
}

TEST(Json, ReportRoundTrip) {
  RlctReport r;
  r.lambda1 = Rational(3, 4);
  r.m1 = 1;
  const auto j = io::report_to_json(r, true);
  EXPECT_EQ(j["lambda1"], "3/4");
  const auto back = io::report_from_json(j);
  EXPECT_EQ(back.lambda1, r.lambda1);
  EXPECT_EQ(back.m1, 1u);
  EXPECT_THROW(io::report_from_json(io::parse_json("{\"lambda1\":\"0\",\"m1\":1}")), ParseError);
}

TEST(Json, QuadratureRoundTrip) {
  const auto s = io::quadrature_from_json(io::read_json_file(fixture("app_b/quadrature.json")));
  EXPECT_EQ(s.box.size(), 3u);
  EXPECT_EQ(s.points_per_axis, 256u);
  const auto t = io::quadrature_from_json(io::quadrature_to_json(s));
  EXPECT_EQ(t.n_values, s.n_values);
  EXPECT_EQ(t.box, s.box);
}

TEST(Hirzebruch, PrintedChartRingsAreRegular) {
  const auto duals = io::fan_from_json(io::read_json_file(fixture("fans/hirzebruch1_printed_duals.json")));
  ASSERT_EQ(duals.cones.size(), 4u);
  for (const auto& tau : duals.cones) {
    auto gens = tau.generators();
    std::sort(gens.begin(), gens.end());
    EXPECT_TRUE(is_regular(tau)) << to_string(tau);
    EXPECT_EQ(hilbert_basis(tau).elements, gens) << to_string(tau);
  }
}

TEST(Hirzebruch, PrintedFanOverlapsStandardFanDoesNot) {
  const auto printed = io::fan_from_json(io::read_json_file(fixture("fans/hirzebruch1_printed.json")));
  const auto r = fan_validate(printed);
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.offending.has_value());
  EXPECT_EQ(*r.offending, (std::pair<std::size_t, std::size_t>{0, 3}));
  const auto standard = io::fan_from_json(io::read_json_file(fixture("fans/hirzebruch1_standard.json")));
  EXPECT_TRUE(fan_validate(standard).valid);
  for (const auto& sigma : standard.cones) EXPECT_EQ(chart_ring_generators(sigma).size(), 2u);
}
