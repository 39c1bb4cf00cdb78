#pragma once

// SVG output: unit-circle galleries and Monge configurations.  Scenes hold
// double coordinates in the math frame; rendering flips y and maps the
// viewport onto an 800-unit-wide canvas.

#include "mg/monge.hpp"

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace mg {

inline constexpr std::size_t kRenderCurveSamples = 512;
inline constexpr double kCanvasWidth = 800;
inline constexpr double kViewportMargin = 0.05;

struct Style {
  std::string cls;
  std::string stroke = "black";
  std::string fill = "none";
  double width = 1.5;
};

/// Polygon or sampled curve.
struct Path {
  std::vector<Point<double>> points;
  bool closed = true;
};

struct Segment {
  Point<double> from, to;
};

/// Drawn as the part of the line inside the viewport.
struct InfiniteLine {
  Line<double> line;
};

struct Marker {
  Point<double> at;
  std::string label;
};

using Shape = std::variant<Path, Segment, InfiniteLine, Marker>;

struct Drawable {
  Shape shape;
  Style style;
};

struct Viewport {
  double xmin, ymin, xmax, ymax;
};

class Scene {
 public:
  explicit Scene(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Drawable>& items() const { return items_; }
  bool empty() const { return items_.empty(); }

  Scene& add(Shape shape, Style style) {
    items_.push_back({std::move(shape), std::move(style)});
    return *this;
  }

  /// Polygons are drawn through their corners only; vertices flagged as
  /// collinear are skipped.  Curves get a 512-point polyline.
  template <Scalar T>
  Scene& add_circle(const Circle<T>& c, Style style) {
    Path path;
    Boundary<T> b = c.boundary();
    if (auto* poly = std::get_if<Polygon<T>>(&b)) {
      for (std::size_t i = 0; i < poly->vertices.size(); ++i) {
        if (!poly->collinear[i]) path.points.push_back(to_double(poly->vertices[i]));
      }
    } else {
      path.points = std::get<ParametricCurve>(b).samples(kRenderCurveSamples);
    }
    return add(std::move(path), std::move(style));
  }

  Scene& add_segment(Point<double> a, Point<double> b, Style style) { return add(Segment{a, b}, std::move(style)); }
  Scene& add_line(const Line<double>& l, Style style) { return add(InfiniteLine{l}, std::move(style)); }
  Scene& add_point(Point<double> at, std::string label, Style style) {
    return add(Marker{at, std::move(label)}, std::move(style));
  }

 private:
  std::string title_;
  std::vector<Drawable> items_;
};

/// Bounding box of the finite drawables, widened by 5% on each side.
/// Throws invalid_argument for a scene without finite drawables.
inline Viewport viewport(const Scene& s) {
  std::optional<Viewport> box;
  auto grow = [&](const Point<double>& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw std::invalid_argument("scene coordinates must be finite");
    if (!box) {
      box = Viewport{p.x, p.y, p.x, p.y};
      return;
    }
    box->xmin = std::min(box->xmin, p.x);
    box->ymin = std::min(box->ymin, p.y);
    box->xmax = std::max(box->xmax, p.x);
    box->ymax = std::max(box->ymax, p.y);
  };
  for (const auto& d : s.items()) {
    if (auto* p = std::get_if<Path>(&d.shape)) {
      for (const auto& q : p->points) grow(q);
    } else if (auto* g = std::get_if<Segment>(&d.shape)) {
      grow(g->from);
      grow(g->to);
    } else if (auto* m = std::get_if<Marker>(&d.shape)) {
      grow(m->at);
    }
  }
  if (!box) throw std::invalid_argument("empty scene");
  // A box that collapses in one direction borrows the other extent.
  double w = box->xmax - box->xmin, h = box->ymax - box->ymin;
  if (w == 0 && h == 0) w = h = 1;
  if (w == 0) w = h;
  if (h == 0) h = w;
  double cx = 0.5 * (box->xmin + box->xmax), cy = 0.5 * (box->ymin + box->ymax);
  double hx = (0.5 + kViewportMargin) * w, hy = (0.5 + kViewportMargin) * h;
  return {cx - hx, cy - hy, cx + hx, cy + hy};
}

/// Liang-Barsky clip of an infinite line to the viewport rectangle.  Empty
/// when the line misses the rectangle or is the line at infinity.
inline std::optional<std::array<Point<double>, 2>> clip_line(const Line<double>& l, const Viewport& v) {
  double nn = l.a() * l.a() + l.b() * l.b();
  if (nn == 0) return std::nullopt;
  Point<double> base{-l.c() * l.a() / nn, -l.c() * l.b() / nn};
  Point<double> dir{-l.b(), l.a()};
  double t0 = -kInfinity, t1 = kInfinity;
  auto edge = [&](double p, double q) {
    if (p == 0) return q >= 0;
    double r = q / p;
    if (p < 0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
    return true;
  };
  if (!edge(-dir.x, base.x - v.xmin) || !edge(dir.x, v.xmax - base.x) || !edge(-dir.y, base.y - v.ymin) ||
      !edge(dir.y, v.ymax - base.y))
    return std::nullopt;
  if (!(t0 < t1)) return std::nullopt;
  return std::array<Point<double>, 2>{base + t0 * dir, base + t1 * dir};
}

namespace detail {

inline std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

inline std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

inline std::string style_attrs(const Style& s) {
  std::string out;
  if (!s.cls.empty()) out += " class=\"" + escape_xml(s.cls) + "\"";
  out += " stroke=\"" + escape_xml(s.stroke) + "\" fill=\"" + escape_xml(s.fill) + "\" stroke-width=\"" +
         fixed3(s.width) + "\"";
  return out;
}

}  // namespace detail

/// Deterministic SVG 1.1 text.  Identical scenes give identical bytes.
inline std::string render_scene(const Scene& s) {
  Viewport v = viewport(s);
  const double scale = kCanvasWidth / (v.xmax - v.xmin);
  const double height = (v.ymax - v.ymin) * scale;
  auto X = [&](double x) { return detail::fixed3((x - v.xmin) * scale); };
  auto Y = [&](double y) { return detail::fixed3((v.ymax - y) * scale); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::fixed3(kCanvasWidth)
     << "\" height=\"" << detail::fixed3(height) << "\" viewBox=\"0 0 " << detail::fixed3(kCanvasWidth) << " "
     << detail::fixed3(height) << "\">\n";
  if (!s.title().empty()) os << "<title>" << detail::escape_xml(s.title()) << "</title>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << detail::fixed3(kCanvasWidth) << "\" height=\"" << detail::fixed3(height)
     << "\" fill=\"white\"/>\n";

  for (const auto& d : s.items()) {
    std::string attrs = detail::style_attrs(d.style);
    if (auto* p = std::get_if<Path>(&d.shape)) {
      if (p->points.empty()) continue;
      os << "<path" << attrs << " d=\"";
      for (std::size_t i = 0; i < p->points.size(); ++i) {
        os << (i == 0 ? "M" : " L") << X(p->points[i].x) << " " << Y(p->points[i].y);
      }
      if (p->closed) os << " Z";
      os << "\"/>\n";
    } else if (auto* g = std::get_if<Segment>(&d.shape)) {
      os << "<line" << attrs << " x1=\"" << X(g->from.x) << "\" y1=\"" << Y(g->from.y) << "\" x2=\"" << X(g->to.x)
         << "\" y2=\"" << Y(g->to.y) << "\"/>\n";
    } else if (auto* l = std::get_if<InfiniteLine>(&d.shape)) {
      auto ends = clip_line(l->line, v);
      if (!ends) continue;
      os << "<line" << attrs << " x1=\"" << X((*ends)[0].x) << "\" y1=\"" << Y((*ends)[0].y) << "\" x2=\""
         << X((*ends)[1].x) << "\" y2=\"" << Y((*ends)[1].y) << "\"/>\n";
    } else if (auto* m = std::get_if<Marker>(&d.shape)) {
      os << "<circle" << attrs << " cx=\"" << X(m->at.x) << "\" cy=\"" << Y(m->at.y) << "\" r=\"4.000\"/>\n";
      if (!m->label.empty()) {
        os << "<text x=\"" << detail::fixed3((m->at.x - v.xmin) * scale + 6) << "\" y=\""
           << detail::fixed3((v.ymax - m->at.y) * scale - 6) << "\" font-family=\"sans-serif\" font-size=\"14\">"
           << detail::escape_xml(m->label) << "</text>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

namespace detail {

inline const std::array<const char*, 3> kCirclePalette{"#1f77b4", "#2ca02c", "#d62728"};

/// Tangent segment from the apex to the farther contact, or between the
/// contacts when the apex is at infinity.
template <Scalar T>
Segment tangent_segment(const TangentPair<T>& tp, std::size_t side) {
  Point<double> a = to_double(tp.touch_i[side].point), b = to_double(tp.touch_j[side].point);
  if (auto apex = to_double(tp.apex).affine()) {
    Point<double> far = max_norm(a - *apex) > max_norm(b - *apex) ? a : b;
    return {*apex, far};
  }
  return {a, b};
}

}  // namespace detail

/// Circles, six tangent segments, the Monge line and the finite Monge points.
template <Scalar T>
Scene monge_scene(const MongeReport<T>& rep) {
  Scene s("Monge configuration, " + rep.circles[0].metric().name());
  for (std::size_t i = 0; i < 3; ++i) s.add_circle(rep.circles[i], {"circle", detail::kCirclePalette[i], "none", 2});
  if (rep.tangents) {
    for (const auto& tp : *rep.tangents) {
      for (std::size_t side = 0; side < 2; ++side) s.add(detail::tangent_segment(tp, side), {"tangent", "#7f7f7f", "none", 1});
    }
  }
  if (rep.monge_line && !rep.monge_line->at_infinity()) s.add_line(to_double(*rep.monge_line), {"monge-line", "#9467bd", "none", 1.5});
  static constexpr std::array<const char*, 3> labels{"P12", "P13", "P23"};
  for (std::size_t k = 0; k < 3; ++k) {
    if (auto p = to_double(rep.apexes_closed[k]).affine()) s.add_point(*p, labels[k], {"monge-point", "black", "black", 1});
  }
  return s;
}

/// Two circles, their tangent segments and the apex when it is finite.
template <Scalar T>
Scene tangent_scene(const Circle<T>& ci, const Circle<T>& cj, const TangentPair<T>& tp) {
  Scene s("External tangents, " + ci.metric().name());
  s.add_circle(ci, {"circle", detail::kCirclePalette[0], "none", 2});
  s.add_circle(cj, {"circle", detail::kCirclePalette[1], "none", 2});
  for (std::size_t side = 0; side < 2; ++side) s.add(detail::tangent_segment(tp, side), {"tangent", "#7f7f7f", "none", 1});
  if (auto p = to_double(tp.apex).affine()) s.add_point(*p, "P", {"monge-point", "black", "black", 1});
  return s;
}

/// Unit circles of alpha k in {2, sqrt 2, 1 + 1e-6} and l_p, p in {1, 2, 3, inf}.
inline Scene unit_circle_gallery() {
  Scene s("Unit circles");
  const Point<double> o{0, 0};
  const std::array<std::pair<Metric<double>, const char*>, 7> entries{{
      {Metric<double>::alpha_k(2), "#1f77b4"},
      {Metric<double>::alpha_k(std::sqrt(2.0)), "#ff7f0e"},
      {Metric<double>::alpha_k(1 + 1e-6), "#2ca02c"},
      {Metric<double>::lp(1), "#d62728"},
      {Metric<double>::lp(2), "#9467bd"},
      {Metric<double>::lp(3), "#8c564b"},
      {Metric<double>::lp(kInfinity), "#e377c2"},
  }};
  for (const auto& [m, color] : entries) s.add_circle(Circle<double>(o, 1.0, m), {"unit-circle " + m.name(), color, "none", 1.5});
  return s;
}

}  // namespace mg
