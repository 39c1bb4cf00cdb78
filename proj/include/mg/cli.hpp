#pragma once

// Command-line front end.  `run` takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success / PASS, 1 invalid input, 2 verification FAIL.

#include "mg/fuzz.hpp"
#include "mg/render.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitFail = 2;

namespace detail {

template <Scalar T>
Point<T> parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("point must be written x,y: \"" + text + "\"");
  return {parse_scalar<T>(text.substr(0, comma)), parse_scalar<T>(text.substr(comma + 1))};
}

inline std::string show(const Rational& v) { return to_text(v); }

/// 15 significant digits, with round-off below 1e-12 of `scale` shown as 0.
inline std::string show(double v, double scale = 1) {
  if (std::fabs(v) <= 1e-12 * std::max(1.0, std::fabs(scale))) return "0";
  return to_text(v, 15);
}

template <Scalar T>
std::string show_point(const HPoint<T>& p) {
  HPoint<T> c = canonical(p);
  if constexpr (is_exact_v<T>) {
    if (c.at_infinity()) return "at infinity, direction (" + show(c.x()) + ", " + show(c.y()) + ")";
    return "(" + show(c.x()) + ", " + show(c.y()) + ")";
  } else {
    double s = std::max(std::fabs(c.x()), std::fabs(c.y()));
    if (c.at_infinity()) return "at infinity, direction (" + show(c.x(), s) + ", " + show(c.y(), s) + ")";
    return "(" + show(c.x(), s) + ", " + show(c.y(), s) + ")";
  }
}

template <Scalar T>
std::string show_line(const Line<T>& l) {
  if constexpr (is_exact_v<T>) {
    return show(l.a()) + " " + show(l.b()) + " " + show(l.c());
  } else {
    double s = std::max({std::fabs(l.a()), std::fabs(l.b()), std::fabs(l.c())});
    return show(l.a(), s) + " " + show(l.b(), s) + " " + show(l.c(), s);
  }
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
}

/// Scalar mode: an explicit flag wins over the instance file.
inline ScalarMode pick_mode(const RawInstance& raw, bool exact, bool floating) {
  if (exact && floating) throw std::invalid_argument("--exact and --float are mutually exclusive");
  if (exact) return ScalarMode::exact;
  if (floating) return ScalarMode::floating;
  return raw.mode;
}

template <Scalar T>
int dist(const std::string& metric, const std::string& from, const std::string& to, std::ostream& out) {
  Metric<T> m = parse_metric<T>(metric);
  T d = m.distance(parse_point<T>(from), parse_point<T>(to));
  if constexpr (is_exact_v<T>) {
    out << to_text(d) << "\n";
  } else {
    out << to_text(d, 15) << "\n";
  }
  return kExitOk;
}

template <Scalar T>
int circle(const std::string& metric, const std::string& center, const std::string& radius,
           const std::vector<std::string>& points, const std::string& svg, std::size_t samples, std::ostream& out) {
  Circle<T> c(parse_point<T>(center), parse_scalar<T>(radius), parse_metric<T>(metric));
  out << "metric: " << c.metric().name() << "\n";
  Boundary<T> b = c.boundary();
  if (auto* poly = std::get_if<Polygon<T>>(&b)) {
    out << "boundary: polygon, " << poly->vertices.size() << " vertices\n";
    for (std::size_t i = 0; i < poly->vertices.size(); ++i) {
      out << "  A" << (i + 1) << " " << show(poly->vertices[i].x) << " " << show(poly->vertices[i].y)
          << (poly->collinear[i] ? " collinear" : "") << "\n";
    }
  } else {
    const auto& curve = std::get<ParametricCurve>(b);
    out << "boundary: curve, p=" << to_text(curve.p()) << "\n";
    if (samples > 0) {
      for (const auto& q : curve.samples(samples)) out << "  " << to_text(q.x, 15) << " " << to_text(q.y, 15) << "\n";
    }
  }
  for (const auto& text : points) out << text << ": " << to_string(classify(c, parse_point<T>(text))) << "\n";
  if (!svg.empty()) {
    Scene s("Circle, " + c.metric().name());
    s.add_circle(c, {"circle", "#1f77b4", "none", 2});
    write_file(svg, render_scene(s));
  }
  return kExitOk;
}

template <Scalar T>
int tangents(const RawInstance& raw, const std::string& svg, std::ostream& out, std::ostream& err) {
  auto inst = build_instance<T>(raw, 2);
  const auto& ci = inst.circles[0];
  const auto& cj = inst.circles[1];
  std::optional<TangentPair<T>> found;
  try {
    found = external_tangents(ci, cj);
  } catch (const inadmissible_error& e) {
    err << "inadmissible pair: " << e.what() << "\n";
    return kExitInvalid;
  }
  const TangentPair<T>& tp = *found;
  for (std::size_t s = 0; s < 2; ++s) out << "line " << (s + 1) << ": " << show_line(tp.lines[s]) << "\n";
  out << "apex: " << show_point(tp.apex) << "\n";
  if (!svg.empty()) write_file(svg, render_scene(tangent_scene(ci, cj, tp)));
  return kExitOk;
}

template <Scalar T>
int monge(const RawInstance& raw, const std::string& svg, std::ostream& out) {
  auto rep = verify_monge(as_triple(build_instance<T>(raw, 3)));
  out << report_json(rep).dump(2) << "\n";
  if (!svg.empty()) write_file(svg, render_scene(monge_scene(rep)));
  if (!rep.admissible.ok()) return kExitInvalid;
  return rep.pass ? kExitOk : kExitFail;
}

/// MG_SEED, when set, replaces the seed given on the command line.
inline std::uint64_t effective_seed(std::uint64_t seed) {
  const char* env = std::getenv("MG_SEED");
  if (env == nullptr || *env == '\0') return seed;
  std::string s(env);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used, 10);
  } catch (const std::exception&) {
    throw std::invalid_argument("MG_SEED must be an unsigned integer");
  }
  if (used != s.size()) throw std::invalid_argument("MG_SEED must be an unsigned integer");
  return v;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minkowski-plane circles, tangents and Monge lines", "mg"};
  app.require_subcommand(1);

  std::string metric, from, to, center, radius, file, svg, family = "alpha";
  std::vector<std::string> points;
  bool exact = false, floating = false;
  std::size_t samples = 0;
  FuzzConfig fuzz;

  auto* dist = app.add_subcommand("dist", "distance between two points");
  dist->add_option("--metric", metric, "euclidean, alpha:<rad>, alpha-k:<p/q>, lp:<p>, lp:inf")->required();
  dist->add_option("--from", from, "x,y")->required();
  dist->add_option("--to", to, "x,y")->required();
  dist->add_flag("--exact", exact, "rational arithmetic");

  auto* circle = app.add_subcommand("circle", "boundary of a metric circle");
  circle->add_option("--metric", metric)->required();
  circle->add_option("--center", center, "x,y")->default_val("0,0");
  circle->add_option("--radius", radius)->default_val("1");
  circle->add_option("--point", points, "x,y to classify (repeatable)");
  circle->add_option("--samples", samples, "print this many curve samples");
  circle->add_option("--svg", svg, "write an SVG figure");
  circle->add_flag("--exact", exact, "rational arithmetic");

  auto* tangents = app.add_subcommand("tangents", "external tangents of a two-circle instance");
  tangents->add_option("instance", file, "instance JSON")->required();
  tangents->add_flag("--exact", exact);
  tangents->add_flag("--float", floating);
  tangents->add_option("--svg", svg, "write an SVG figure");

  auto* monge = app.add_subcommand("monge", "verify Monge's theorem for a three-circle instance");
  monge->add_option("instance", file, "instance JSON")->required();
  monge->add_flag("--exact", exact);
  monge->add_flag("--float", floating);
  monge->add_option("--svg", svg, "write an SVG figure");

  auto* fz = app.add_subcommand("fuzz", "verify random admissible triples");
  fz->add_option("--family", family, "alpha, lp or euclidean");
  fz->add_option("--trials", fuzz.trials)->check(CLI::PositiveNumber);
  fz->add_option("--seed", fuzz.seed, "overridden by MG_SEED");
  fz->add_option("--coord-range", fuzz.coord_range, "centers in [-R, R]^2")->check(CLI::PositiveNumber);
  fz->add_option("--radius-max", fuzz.radius_max, "radii in (0, R]")->check(CLI::PositiveNumber);
  fz->add_option("--threads", fuzz.threads)->check(CLI::PositiveNumber);

  auto* gallery = app.add_subcommand("gallery", "unit circle gallery SVG");
  gallery->add_option("--svg", svg, "output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*dist) return exact ? detail::dist<Rational>(metric, from, to, out) : detail::dist<double>(metric, from, to, out);
    if (*circle) {
      return exact ? detail::circle<Rational>(metric, center, radius, points, svg, samples, out)
                   : detail::circle<double>(metric, center, radius, points, svg, samples, out);
    }
    if (*tangents || *monge) {
      RawInstance raw = read_instance_file(file);
      ScalarMode mode = detail::pick_mode(raw, exact, floating);
      if (*tangents) {
        return mode == ScalarMode::exact ? detail::tangents<Rational>(raw, svg, out, err)
                                         : detail::tangents<double>(raw, svg, out, err);
      }
      return mode == ScalarMode::exact ? detail::monge<Rational>(raw, svg, out) : detail::monge<double>(raw, svg, out);
    }
    if (*fz) {
      fuzz.family = parse_family(family);
      fuzz.seed = detail::effective_seed(fuzz.seed);
      FuzzSummary s = run_fuzz(fuzz);
      out << format_summary(s);
      return s.failures() == 0 ? kExitOk : kExitFail;
    }
    if (*gallery) {
      detail::write_file(svg, render_scene(unit_circle_gallery()));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace mg::cli
