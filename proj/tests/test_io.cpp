#include "support.hpp"

#include <gtest/gtest.h>

namespace mg {
namespace {

using Q = Rational;

const char* kWorked = R"({
  "metric": "alpha-k:3/2",
  "scalar_mode": "exact",
  "circles": [{"cx": "0", "cy": "0", "r": "1"}, {"cx": 6, "cy": "0", "r": "2"}, {"cx": "0", "cy": "6", "r": "3"}]
})";

TEST(Instance, ParsesStringsAndIntegers) {
  RawInstance raw = parse_instance_text(kWorked);
  EXPECT_EQ(raw.metric, "alpha-k:3/2");
  EXPECT_EQ(raw.mode, ScalarMode::exact);
  ASSERT_EQ(raw.circles.size(), 3u);
  EXPECT_EQ(raw.circles[1].cx, "6");
  auto inst = build_instance<Q>(raw, 3);
  EXPECT_EQ(inst.circles[2].radius(), 3);
  EXPECT_EQ(inst.metric.k(), Q(3, 2));
}

TEST(Instance, RationalStringsAndDecimals) {
  auto raw = parse_instance_text(
      R"({"metric":"lp:1","scalar_mode":"exact","circles":[{"cx":"1/3","cy":"-0.25","r":"5/2"},{"cx":9,"cy":0,"r":1}]})");
  auto inst = build_instance<Q>(raw, 2);
  EXPECT_EQ(inst.circles[0].center().x, Q(1, 3));
  EXPECT_EQ(inst.circles[0].center().y, Q(-1, 4));
  auto flt = build_instance<double>(raw, 2);
  EXPECT_DOUBLE_EQ(flt.circles[0].center().x, 1.0 / 3);
}

TEST(Instance, FloatNumbersOnlyInFloatMode) {
  const char* exact = R"({"metric":"lp:1","scalar_mode":"exact","circles":[{"cx":0.5,"cy":0,"r":1}]})";
  EXPECT_THROW(parse_instance_text(exact), std::invalid_argument);
  const char* flt = R"({"metric":"lp:3","scalar_mode":"float","circles":[{"cx":0.5,"cy":0,"r":2.25}]})";
  auto inst = build_instance<double>(parse_instance_text(flt));
  EXPECT_EQ(inst.circles[0].center().x, 0.5);
  EXPECT_EQ(inst.circles[0].radius(), 2.25);
}

TEST(Instance, ModeDefaultsToFloat) {
  auto raw = parse_instance_text(R"({"metric":"euclidean","circles":[]})");
  EXPECT_EQ(raw.mode, ScalarMode::floating);
}

TEST(Instance, Errors) {
  EXPECT_THROW(parse_instance_text("{"), std::invalid_argument);
  EXPECT_THROW(parse_instance_text("[]"), std::invalid_argument);
  EXPECT_THROW(parse_instance_text(R"({"circles":[]})"), std::invalid_argument);
  EXPECT_THROW(parse_instance_text(R"({"metric":"lp:1"})"), std::invalid_argument);
  EXPECT_THROW(parse_instance_text(R"({"metric":"lp:1","scalar_mode":"fast","circles":[]})"), std::invalid_argument);
  EXPECT_THROW(parse_instance_text(R"({"metric":"lp:1","circles":[{"cx":0,"cy":0}]})"), std::invalid_argument);
  EXPECT_THROW(parse_instance_text(R"({"metric":"lp:1","circles":[{"cx":true,"cy":0,"r":1}]})"), std::invalid_argument);
  EXPECT_THROW(read_instance_file("/nonexistent/instance.json"), std::invalid_argument);

  auto raw = parse_instance_text(kWorked);
  EXPECT_THROW(build_instance<Q>(raw, 2), std::invalid_argument);
  raw.metric = "lp:3";
  EXPECT_THROW(build_instance<Q>(raw), mode_error);
  raw.metric = "lp:3";
  EXPECT_NO_THROW(build_instance<double>(raw));
  raw.circles[0].r = "0";
  EXPECT_THROW(build_instance<double>(raw), std::invalid_argument);
  raw.circles[0].r = "x";
  EXPECT_THROW(build_instance<double>(raw), std::invalid_argument);
}

TEST(Instance, RoundTrip) {
  RawInstance raw = parse_instance_text(kWorked);
  RawInstance again = parse_instance(to_json(raw));
  EXPECT_EQ(again.metric, raw.metric);
  EXPECT_EQ(again.mode, raw.mode);
  ASSERT_EQ(again.circles.size(), raw.circles.size());
  for (std::size_t i = 0; i < raw.circles.size(); ++i) {
    EXPECT_EQ(again.circles[i].cx, raw.circles[i].cx);
    EXPECT_EQ(again.circles[i].cy, raw.circles[i].cy);
    EXPECT_EQ(again.circles[i].r, raw.circles[i].r);
  }
}

TEST(Report, WorkedExact) {
  auto rep = verify_monge(as_triple(build_instance<Q>(parse_instance_text(kWorked), 3)));
  json j = report_json(rep);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["scalar_mode"], "exact");
  EXPECT_EQ(j["metric"], "alpha-k:3/2");
  EXPECT_EQ(j["monge_points"]["closed_form"]["P12"], json({{"x", "-6"}, {"y", "0"}}));
  EXPECT_EQ(j["monge_points"]["closed_form"]["P13"], json({{"x", "0"}, {"y", "-3"}}));
  EXPECT_EQ(j["monge_points"]["closed_form"]["P23"], json({{"x", "18"}, {"y", "-12"}}));
  EXPECT_EQ(j["monge_points"]["tangent_route"], j["monge_points"]["closed_form"]);
  EXPECT_EQ(j["determinants"], json({{"D_x", "12"}, {"D_y", "-6"}, {"D_xyr", "36"}}));
  // (D_y, -D_x, -D_xyr) = (-6, -12, -36), scaled so |a| = 1.
  EXPECT_EQ(j["monge_line"], json({{"a", "-1"}, {"b", "-2"}, {"c", "-6"}}));
  EXPECT_EQ(j["residuals"]["collinearity_closed"], "0");
  EXPECT_EQ(j["residuals"]["apex_discrepancy"]["P23"], "0");
  EXPECT_TRUE(j["admissible"]["ok"].get<bool>());
  EXPECT_EQ(j["tangents"]["P12"]["lines"].size(), 2u);
}

TEST(Report, FloatResidualsAreNumbers) {
  auto raw = parse_instance_text(kWorked);
  raw.metric = "lp:3";
  auto rep = verify_monge(as_triple(build_instance<double>(raw, 3)));
  json j = report_json(rep);
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_EQ(j["scalar_mode"], "float");
  ASSERT_TRUE(j["residuals"]["collinearity_tangent"].is_number());
  EXPECT_LT(j["residuals"]["collinearity_tangent"].get<double>(), 1e-9);
  EXPECT_TRUE(j["tangents"]["P23"]["lines"][0]["touch_i"].contains("parameter"));
}

TEST(Report, InadmissibleAndInfinitePoints) {
  auto overlap = parse_instance_text(
      R"({"metric":"lp:1","scalar_mode":"exact","circles":[{"cx":0,"cy":0,"r":2},{"cx":1,"cy":0,"r":3},{"cx":40,"cy":40,"r":1}]})");
  json j = report_json(verify_monge(as_triple(build_instance<Q>(overlap, 3))));
  EXPECT_EQ(j["status"], "INADMISSIBLE");
  EXPECT_TRUE(j["monge_points"]["tangent_route"].is_null());
  EXPECT_TRUE(j["tangents"].is_null());
  EXPECT_EQ(j["admissible"]["reasons"][0], "overlap(1,2)");

  auto equal = parse_instance_text(
      R"({"metric":"lp:1","scalar_mode":"exact","circles":[{"cx":0,"cy":0,"r":1},{"cx":8,"cy":4,"r":1},{"cx":2,"cy":12,"r":3}]})");
  json k = report_json(verify_monge(as_triple(build_instance<Q>(equal, 3))));
  EXPECT_EQ(k["status"], "PASS");
  EXPECT_EQ(k["monge_points"]["closed_form"]["P12"], json({{"at_infinity", true}, {"dx", "1"}, {"dy", "1/2"}}));
  EXPECT_FALSE(k["admissible"]["distinct_radii"].get<bool>());
  EXPECT_FALSE(k["notes"].empty());
}

}  // namespace
}  // namespace mg
