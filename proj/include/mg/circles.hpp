#pragma once

// Metric circles {X : d(M, X) = r}.  Alpha, l_1 and l_inf circles are convex
// polygons; l_p circles for 1 < p < inf are smooth superellipses.

#include "mg/metrics.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <variant>
#include <vector>

namespace mg {

/// Vertices A_1..A_8 of the unit alpha circle, counterclockwise from (1, 0):
/// (1,0), (1/k,1/k), (0,1), (-1/k,1/k), (-1,0), (-1/k,-1/k), (0,-1), (1/k,-1/k).
/// `collinear[i]` marks vertices lying on the segment between their
/// neighbours, which happens for the taxicab diamond (k = 2).
template <Scalar T>
struct UnitOctagon {
  std::array<Point<T>, 8> vertices;
  std::array<bool, 8> collinear{};
};

template <Scalar T>
UnitOctagon<T> unit_circle_vertices(const T& k) {
  if (!(k > 1 && k <= 2)) throw std::invalid_argument("unit_circle_vertices: k must lie in (1, 2]");
  const T one(1), zero(0);
  const T d = one / k;
  UnitOctagon<T> oct;
  oct.vertices = {Point<T>{one, zero},  Point<T>{d, d},          Point<T>{zero, one}, Point<T>{T(-d), d},
                  Point<T>{T(-one), zero}, Point<T>{T(-d), T(-d)}, Point<T>{zero, T(-one)}, Point<T>{d, T(-d)}};
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& prev = oct.vertices[(i + 7) % 8];
    const auto& next = oct.vertices[(i + 1) % 8];
    T turn = orient(prev, oct.vertices[i], next);
    if constexpr (is_exact_v<T>) {
      oct.collinear[i] = turn == 0;
    } else {
      oct.collinear[i] = std::fabs(turn) <= 1e-12;
    }
  }
  return oct;
}

/// Convex polygon, counterclockwise, no repeated vertices.  Vertices lying on
/// a straight edge are kept and flagged.
template <Scalar T>
struct Polygon {
  std::vector<Point<T>> vertices;
  std::vector<bool> collinear;
};

/// Boundary of the l_p circle of radius r about c, 1 < p < inf:
///   t -> c + r * (sgn(cos t)|cos t|^(2/p), sgn(sin t)|sin t|^(2/p)).
/// Counterclockwise in t.  The tangent sampler returns the unit tangent
/// direction; it is derived from the curve normal rather than from d/dt,
/// which degenerates on the axes for p != 2.
class ParametricCurve {
 public:
  static constexpr std::size_t kDefaultSamples = 4096;

  ParametricCurve(Point<double> center, double radius, double p) : center_(center), radius_(radius), p_(p) {
    if (!(p > 1 && p < kInfinity)) throw std::invalid_argument("ParametricCurve needs 1 < p < inf");
  }

  const Point<double>& center() const { return center_; }
  double radius() const { return radius_; }
  double p() const { return p_; }

  /// The angle is reduced to [0, pi/2) plus a quadrant before cos/sin, so
  /// parameters on the axes give exact zeros; |cos t|^(2/p) would otherwise
  /// amplify a 1e-16 residue to ~1e-2 for large p.
  Point<double> unit_point(double t) const {
    constexpr double quarter = std::numbers::pi / 2;
    double q = std::floor(t / quarter);
    double u = t - q * quarter;
    if (u < 0) {
      u += quarter;
      q -= 1;
    } else if (u >= quarter) {
      u -= quarter;
      q += 1;
    }
    double c = std::cos(u), s = std::sin(u);
    if (p_ != 2) {
      double e = 2.0 / p_;
      c = std::pow(c, e);
      s = std::pow(s, e);
    }
    switch (static_cast<int>(std::fmod(std::fmod(q, 4.0) + 4.0, 4.0))) {
      case 0:
        return {c, s};
      case 1:
        return {-s, c};
      case 2:
        return {-c, -s};
      default:
        return {s, -c};
    }
  }

  Point<double> point(double t) const { return center_ + radius_ * unit_point(t); }

  Point<double> tangent(double t) const {
    Point<double> u = unit_point(t);
    Point<double> n = p_ == 2 ? u
                              : Point<double>{std::copysign(std::pow(std::fabs(u.x), p_ - 1), u.x),
                                              std::copysign(std::pow(std::fabs(u.y), p_ - 1), u.y)};
    double len = std::hypot(n.x, n.y);
    return {-n.y / len, n.x / len};
  }

  /// n evenly spaced parameter samples starting at t = 0.
  std::vector<Point<double>> samples(std::size_t n = kDefaultSamples) const {
    std::vector<Point<double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(point(parameter(i, n)));
    return out;
  }

  static double parameter(std::size_t i, std::size_t n) {
    return 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
  }

 private:
  Point<double> center_;
  double radius_;
  double p_;
};

template <Scalar T>
using Boundary = std::variant<Polygon<T>, ParametricCurve>;

template <Scalar T>
class Circle {
 public:
  Circle(Point<T> center, T radius, Metric<T> metric)
      : center_(std::move(center)), radius_(std::move(radius)), metric_(std::move(metric)) {
    if (!(radius_ > 0)) throw std::invalid_argument("circle radius must be positive");
  }

  const Point<T>& center() const { return center_; }
  const T& radius() const { return radius_; }
  const Metric<T>& metric() const { return metric_; }

  Boundary<T> boundary() const {
    const T& r = radius_;
    const T zero(0);
    Polygon<T> poly;
    switch (metric_.family()) {
      case Family::alpha: {
        auto oct = unit_circle_vertices(metric_.k());
        for (std::size_t i = 0; i < 8; ++i) {
          poly.vertices.push_back(center_ + r * oct.vertices[i]);
          poly.collinear.push_back(oct.collinear[i]);
        }
        return poly;
      }
      case Family::lp:
        if (metric_.p() == 1) {
          poly.vertices = {center_ + Point<T>{r, zero}, center_ + Point<T>{zero, r}, center_ + Point<T>{T(-r), zero},
                           center_ + Point<T>{zero, T(-r)}};
          poly.collinear.assign(4, false);
          return poly;
        }
        if (metric_.p() == kInfinity) {
          poly.vertices = {center_ + Point<T>{r, r}, center_ + Point<T>{T(-r), r}, center_ + Point<T>{T(-r), T(-r)},
                           center_ + Point<T>{r, T(-r)}};
          poly.collinear.assign(4, false);
          return poly;
        }
        [[fallthrough]];
      case Family::euclidean:
        if constexpr (is_exact_v<T>) {
          throw mode_error("curved circles have no exact boundary");
        } else {
          return ParametricCurve(center_, radius_, metric_.p());
        }
    }
    throw std::logic_error("unreachable");
  }

 private:
  Point<T> center_;
  T radius_;
  Metric<T> metric_;
};

inline Circle<double> to_double(const Circle<Rational>& c) {
  return {to_double(c.center()), to_double(c.radius()), to_double(c.metric())};
}
inline const Circle<double>& to_double(const Circle<double>& c) { return c; }

enum class Location { inside, on, outside };

inline const char* to_string(Location l) {
  switch (l) {
    case Location::inside:
      return "inside";
    case Location::on:
      return "on";
    case Location::outside:
      return "outside";
  }
  return "?";
}

template <Scalar T>
Location classify(const Circle<T>& c, const Point<T>& x) {
  T d = c.metric().distance(c.center(), x);
  if constexpr (is_exact_v<T>) {
    if (d == c.radius()) return Location::on;
  } else {
    if (std::fabs(d - c.radius()) <= kFloatTolerance * c.radius()) return Location::on;
  }
  return d < c.radius() ? Location::inside : Location::outside;
}

/// Support line {X : <n, X> = h} of a circle in direction n, with the
/// boundary vertices (polygon) or the curve parameter where it touches.
template <Scalar T>
struct Support {
  Line<T> line;
  T value;                             // h = max over the circle of <n, X>
  Point<T> point;                      // one maximizer
  std::vector<std::size_t> vertices;   // polygon: all maximizing vertices
  std::optional<double> parameter;     // curve: maximizing t
};

namespace detail {

/// Maximizer of <n, X(t)> on a superellipse.  A coarse scan brackets the
/// maximum, then bisection on the sign of <T(t), n> pins it down.
inline double curve_support_parameter(const ParametricCurve& curve, const Point<double>& n) {
  constexpr std::size_t kCoarse = 64;
  std::size_t best = 0;
  double best_v = -kInfinity;
  for (std::size_t i = 0; i < kCoarse; ++i) {
    double v = dot(n, curve.unit_point(ParametricCurve::parameter(i, kCoarse)));
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  double step = 2 * std::numbers::pi / kCoarse;
  double lo = ParametricCurve::parameter(best, kCoarse) - step;
  double hi = lo + 2 * step;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (dot(curve.tangent(mid), n) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

template <Scalar T>
Support<T> support_line(const Circle<T>& c, const Point<T>& n) {
  if (n.x == 0 && n.y == 0) throw std::invalid_argument("support_line: zero direction");
  Boundary<T> b = c.boundary();
  if (auto* poly = std::get_if<Polygon<T>>(&b)) {
    T h = dot(n, poly->vertices.front());
    for (const auto& v : poly->vertices) h = std::max(h, dot(n, v));
    std::vector<std::size_t> touching;
    for (std::size_t i = 0; i < poly->vertices.size(); ++i) {
      T gap = h - dot(n, poly->vertices[i]);
      bool hit;
      if constexpr (is_exact_v<T>) {
        hit = gap == 0;
      } else {
        hit = gap <= 1e-12 * (std::fabs(h) + c.radius() * std::hypot(n.x, n.y));
      }
      if (hit) touching.push_back(i);
    }
    // An edge whose endpoints straddle index 0 is reported with the
    // wrap-around vertex first.
    if (touching.size() > 1 && touching.front() == 0 && touching.back() == poly->vertices.size() - 1) {
      std::size_t k = 0;
      while (k + 1 < touching.size() && touching[k + 1] == touching[k] + 1) ++k;
      std::rotate(touching.begin(), touching.begin() + static_cast<std::ptrdiff_t>(k + 1), touching.end());
    }
    Point<T> at = poly->vertices[touching.front()];
    return Support<T>{Line<T>(n.x, n.y, T(-h)), h, at, std::move(touching), std::nullopt};
  }
  if constexpr (is_exact_v<T>) {
    throw mode_error("curved circles have no exact support line");
  } else {
    const auto& curve = std::get<ParametricCurve>(b);
    double t = detail::curve_support_parameter(curve, n);
    Point<double> at = curve.point(t);
    double h = dot(n, at);
    return Support<double>{Line<double>(n.x, n.y, -h), h, at, {}, t};
  }
}

/// Value of the support function only.
template <Scalar T>
T support_value(const Circle<T>& c, const Point<T>& n) {
  return support_line(c, n).value;
}

}  // namespace mg
