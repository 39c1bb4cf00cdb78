#pragma once

// Instance files and JSON reports.
//
//   {"metric": "alpha-k:3/2", "scalar_mode": "exact",
//    "circles": [{"cx": "0", "cy": "0", "r": "1"}, ...]}
//
// Coordinates are JSON numbers or strings holding decimals or "p/q".

#include "mg/monge.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace mg {

using json = nlohmann::json;

/// An instance as written in the file, before choosing a scalar type.
struct RawInstance {
  std::string metric;
  ScalarMode mode = ScalarMode::floating;
  struct RawCircle {
    std::string cx, cy, r;
  };
  std::vector<RawCircle> circles;
};

template <Scalar T>
struct Instance {
  Metric<T> metric;
  std::vector<Circle<T>> circles;
};

inline ScalarMode parse_mode(std::string_view s) {
  if (s == "exact") return ScalarMode::exact;
  if (s == "float") return ScalarMode::floating;
  throw std::invalid_argument("scalar_mode must be \"exact\" or \"float\", got \"" + std::string(s) + "\"");
}

namespace detail {

/// JSON numbers that are not integers would silently become binary
/// fractions in exact mode, so they are rejected there.
inline std::string coordinate_text(const json& v, ScalarMode mode, const char* key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) {
    if (mode == ScalarMode::exact)
      throw std::invalid_argument(std::string("exact mode needs integer or string values for \"") + key +
                                  "\" (write \"p/q\" or a decimal string)");
    return to_text(v.get<double>());
  }
  throw std::invalid_argument(std::string("\"") + key + "\" must be a number or a string");
}

}  // namespace detail

inline RawInstance parse_instance(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  RawInstance raw;
  if (!j.contains("metric") || !j["metric"].is_string()) throw std::invalid_argument("instance needs a \"metric\" string");
  raw.metric = j["metric"].get<std::string>();
  if (j.contains("scalar_mode")) {
    if (!j["scalar_mode"].is_string()) throw std::invalid_argument("\"scalar_mode\" must be a string");
    raw.mode = parse_mode(j["scalar_mode"].get<std::string>());
  }
  if (!j.contains("circles") || !j["circles"].is_array()) throw std::invalid_argument("instance needs a \"circles\" array");
  for (const auto& c : j["circles"]) {
    if (!c.is_object()) throw std::invalid_argument("each circle must be an object");
    for (const char* key : {"cx", "cy", "r"}) {
      if (!c.contains(key)) throw std::invalid_argument(std::string("circle is missing \"") + key + "\"");
    }
    raw.circles.push_back({detail::coordinate_text(c["cx"], raw.mode, "cx"), detail::coordinate_text(c["cy"], raw.mode, "cy"),
                           detail::coordinate_text(c["r"], raw.mode, "r")});
  }
  return raw;
}

inline RawInstance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

inline RawInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

inline json to_json(const RawInstance& raw) {
  json circles = json::array();
  for (const auto& c : raw.circles) circles.push_back({{"cx", c.cx}, {"cy", c.cy}, {"r", c.r}});
  return {{"metric", raw.metric}, {"scalar_mode", to_string(raw.mode)}, {"circles", circles}};
}

/// Builds typed circles.  Throws mode_error when T does not match a metric
/// that needs floats, invalid_argument on malformed values.
template <Scalar T>
Instance<T> build_instance(const RawInstance& raw, std::size_t expected_circles = 0) {
  if (expected_circles != 0 && raw.circles.size() != expected_circles)
    throw std::invalid_argument("expected " + std::to_string(expected_circles) + " circles, got " +
                                std::to_string(raw.circles.size()));
  Instance<T> inst{parse_metric<T>(raw.metric), {}};
  for (const auto& c : raw.circles)
    inst.circles.emplace_back(Point<T>{parse_scalar<T>(c.cx), parse_scalar<T>(c.cy)}, parse_scalar<T>(c.r), inst.metric);
  return inst;
}

template <Scalar T>
Triple<T> as_triple(const Instance<T>& inst) {
  if (inst.circles.size() != 3) throw std::invalid_argument("a Monge instance needs exactly 3 circles");
  return {inst.circles[0], inst.circles[1], inst.circles[2]};
}

// Report serialization.  Exact values are "p/q" strings; float values are
// JSON numbers.

inline json value_json(const Rational& v) { return to_text(v); }
inline json value_json(double v) { return v; }

/// Residuals: decimal strings in exact mode (they are normally "0").
inline json residual_json(const Rational& v) { return decimal_string(v); }
inline json residual_json(double v) { return v; }

template <Scalar T>
json residual_json(const std::optional<T>& v) {
  return v ? residual_json(*v) : json(nullptr);
}

template <Scalar T>
json point_json(const HPoint<T>& p) {
  HPoint<T> c = canonical(p);
  if (c.at_infinity()) return {{"at_infinity", true}, {"dx", value_json(c.x())}, {"dy", value_json(c.y())}};
  return {{"x", value_json(c.x())}, {"y", value_json(c.y())}};
}

template <Scalar T>
json line_json(const Line<T>& l) {
  return {{"a", value_json(l.a())}, {"b", value_json(l.b())}, {"c", value_json(l.c())}};
}

template <Scalar T>
json touch_json(const Touch<T>& t) {
  json j = {{"point", {{"x", value_json(t.point.x)}, {"y", value_json(t.point.y)}}}};
  if (!t.vertices.empty()) j["vertices"] = t.vertices;
  if (t.parameter) j["parameter"] = *t.parameter;
  return j;
}

template <Scalar T>
json tangents_json(const TangentPair<T>& tp) {
  json lines = json::array();
  for (std::size_t s = 0; s < 2; ++s) {
    lines.push_back({{"line", line_json(tp.lines[s])}, {"touch_i", touch_json(tp.touch_i[s])}, {"touch_j", touch_json(tp.touch_j[s])}});
  }
  return {{"lines", lines}, {"apex", point_json(tp.apex)}};
}

template <Scalar T>
json report_json(const MongeReport<T>& rep) {
  static constexpr std::array<const char*, 3> names{"P12", "P13", "P23"};
  json j;
  j["status"] = rep.pass ? "PASS" : rep.admissible.ok() ? "FAIL" : "INADMISSIBLE";
  j["scalar_mode"] = to_string(rep.mode);
  j["metric"] = rep.circles[0].metric().name();

  json circles = json::array();
  for (const auto& c : rep.circles)
    circles.push_back({{"cx", value_json(c.center().x)}, {"cy", value_json(c.center().y)}, {"r", value_json(c.radius())}});
  j["circles"] = circles;

  j["admissible"] = {{"ok", rep.admissible.ok()},
                     {"non_overlap", rep.admissible.non_overlap},
                     {"no_containment", rep.admissible.no_containment},
                     {"distinct_radii", rep.admissible.distinct_radii},
                     {"reasons", rep.admissible.reasons}};

  json closed, tangent;
  for (std::size_t k = 0; k < 3; ++k) {
    closed[names[k]] = point_json(rep.apexes_closed[k]);
    if (rep.apexes_tangent) tangent[names[k]] = point_json((*rep.apexes_tangent)[k]);
  }
  j["monge_points"] = {{"closed_form", closed}, {"tangent_route", rep.apexes_tangent ? tangent : json(nullptr)}};

  auto d = monge_determinants(rep.circles);
  j["determinants"] = {{"D_x", value_json(d.dx)}, {"D_y", value_json(d.dy)}, {"D_xyr", value_json(d.dxyr)}};
  j["monge_line"] = rep.monge_line ? line_json(*rep.monge_line) : json(nullptr);

  const auto& r = rep.residuals;
  json res;
  res["collinearity_closed"] = residual_json(r.collinearity_closed);
  res["collinearity_tangent"] = residual_json(r.collinearity_tangent);
  for (std::size_t k = 0; k < 3; ++k) {
    res["apex_discrepancy"][names[k]] = residual_json(r.apex_discrepancy[k]);
    res["line_incidence_closed"][names[k]] = residual_json(r.line_incidence_closed[k]);
    res["line_incidence_tangent"][names[k]] = residual_json(r.line_incidence_tangent[k]);
    res["center_line_incidence"][names[k]] = residual_json(r.center_line_incidence[k]);
  }
  j["residuals"] = res;

  if (rep.tangents) {
    json t;
    for (std::size_t k = 0; k < 3; ++k) t[names[k]] = tangents_json((*rep.tangents)[k]);
    j["tangents"] = t;
  } else {
    j["tangents"] = nullptr;
  }
  j["notes"] = rep.notes;
  return j;
}

}  // namespace mg
