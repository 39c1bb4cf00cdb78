#pragma once

// Common external tangents of two circles of the same metric, their
// intersection (the external homothety center), and a brute-force oracle
// that finds the same lines by scanning support directions.

#include "mg/circles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace mg {

template <Scalar T>
void require_same_metric(const Circle<T>& ci, const Circle<T>& cj) {
  if (!(ci.metric() == cj.metric())) throw std::invalid_argument("circles use different metrics");
}

/// External homothety center (r_i x_j - r_j x_i : r_i y_j - r_j y_i : r_i - r_j).
/// At infinity exactly when the radii are equal.
template <Scalar T>
HPoint<T> homothety_center(const Circle<T>& ci, const Circle<T>& cj) {
  require_same_metric(ci, cj);
  const T& ri = ci.radius();
  const T& rj = cj.radius();
  const Point<T>& mi = ci.center();
  const Point<T>& mj = cj.center();
  if (ri == rj && mi == mj) throw degenerate_error("homothety_center: circles coincide");
  return HPoint<T>(T(ri * mj.x - rj * mi.x), T(ri * mj.y - rj * mi.y), T(ri - rj));
}

/// How two circles sit relative to each other, measured in their own metric.
struct PairRelation {
  bool overlap = false;      // d(M_i, M_j) <= r_i + r_j
  bool containment = false;  // d(M_i, M_j) <= |r_i - r_j|
  bool equal_radii = false;
};

template <Scalar T>
PairRelation relate(const Circle<T>& ci, const Circle<T>& cj) {
  require_same_metric(ci, cj);
  T d = ci.metric().distance(ci.center(), cj.center());
  PairRelation rel;
  rel.overlap = d <= ci.radius() + cj.radius();
  rel.containment = d <= abs_of(T(ci.radius() - cj.radius()));
  rel.equal_radii = ci.radius() == cj.radius();
  return rel;
}

/// Default float tolerance for tangency checks, scaled to the configuration.
template <Scalar T>
double tangency_tolerance(const Circle<T>& ci, const Circle<T>& cj, double rel = kFloatTolerance) {
  double scale = std::max({to_double(max_norm(ci.center())), to_double(max_norm(cj.center())),
                           to_double(ci.radius()), to_double(cj.radius())});
  return rel * (1.0 + scale);
}

namespace detail {

/// Which closed side of `l` the circle lies on: -1 (a*x + b*y + c <= 0),
/// +1 (>= 0), or 0 when the line does not touch it as a support line.
template <Scalar T>
int supported_side(const Line<T>& l, const Circle<T>& c, double tol) {
  Point<T> n = l.normal();
  T top = support_value(c, n) + l.c();
  T bottom = l.c() - support_value(c, Point<T>{T(-n.x), T(-n.y)});
  if constexpr (is_exact_v<T>) {
    if (top == 0) return -1;
    if (bottom == 0) return 1;
  } else {
    if (std::fabs(top) <= tol) return -1;
    if (std::fabs(bottom) <= tol) return 1;
  }
  return 0;
}

}  // namespace detail

/// True iff `l` supports both circles and leaves them on the same closed
/// side, i.e. touches both without passing between them.  `tol` is an
/// absolute distance for float lines and ignored in exact mode.
template <Scalar T>
bool is_external_tangent(const Line<T>& l, const Circle<T>& ci, const Circle<T>& cj,
                         std::optional<double> tol = std::nullopt) {
  if (l.at_infinity()) return false;
  double eps = tol.value_or(tangency_tolerance(ci, cj));
  int si = detail::supported_side(l, ci, eps);
  int sj = detail::supported_side(l, cj, eps);
  return si != 0 && si == sj;
}

/// Where a tangent line meets a circle: a polygon vertex (one index), a
/// polygon edge (several indices), or a curve parameter.
template <Scalar T>
struct Touch {
  Point<T> point;
  std::vector<std::size_t> vertices;
  std::optional<double> parameter;
};

/// The two common external tangents.  lines[s] touches circle i at
/// touch_i[s] and circle j at touch_j[s]; apex is their intersection.
template <Scalar T>
struct TangentPair {
  std::array<Line<T>, 2> lines;
  std::array<Touch<T>, 2> touch_i;
  std::array<Touch<T>, 2> touch_j;
  HPoint<T> apex;
};

namespace detail {

/// Tangent points seen from the exterior projective point `from`.  Entry 0
/// is the contact whose line leaves the circle on the positive side of
/// orient(from, contact, .), entry 1 the negative side.  The labelling is
/// preserved by positive homotheties centered at `from`, so matching entries
/// of two homothetic circles lie on one common tangent.
template <Scalar T>
std::array<Touch<T>, 2> polygon_contacts(const Polygon<T>& poly, const HPoint<T>& from) {
  const auto& vs = poly.vertices;
  std::vector<HPoint<T>> hv;
  hv.reserve(vs.size());
  for (const auto& v : vs) hv.emplace_back(v);

  std::array<Touch<T>, 2> out;
  for (int s = 0; s < 2; ++s) {
    const int sign = s == 0 ? 1 : -1;
    std::size_t best = 0;
    std::optional<T> best_score;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      std::optional<T> worst;
      for (std::size_t u = 0; u < vs.size(); ++u) {
        if (u == k) continue;
        T v = orient(from, hv[k], hv[u]);
        if (sign < 0) v = -v;
        if (!worst || v < *worst) worst = v;
      }
      if (!best_score || *worst > *best_score) {
        best_score = worst;
        best = k;
      }
    }
    if constexpr (is_exact_v<T>) {
      if (*best_score < 0) throw geometry_error("tangent vertex search failed: apex is not exterior");
    }
    Touch<T> touch{vs[best], {}, std::nullopt};
    for (std::size_t u = 0; u < vs.size(); ++u) {
      T v = u == best ? T(0) : orient(from, hv[best], hv[u]);
      bool on_line;
      if constexpr (is_exact_v<T>) {
        on_line = v == 0;
      } else {
        double reach = std::max({std::fabs(from.x()), std::fabs(from.y()), std::fabs(from.w())});
        on_line = std::fabs(v) <= 1e-12 * reach * (1 + max_norm(vs[best])) * (1 + max_norm(vs[u]));
      }
      if (on_line) touch.vertices.push_back(u);
    }
    out[s] = std::move(touch);
  }
  return out;
}

inline std::array<Touch<double>, 2> curve_contacts(const ParametricCurve& curve, const HPoint<double>& from) {
  // Work relative to the curve's center.
  const Point<double>& m = curve.center();
  double px = from.x() - from.w() * m.x;
  double py = from.y() - from.w() * m.y;
  double pw = from.w();
  double scale = std::max({std::fabs(px), std::fabs(py), std::fabs(pw)});
  const HPoint<double> apex(px / scale, py / scale, pw / scale);
  const double r = curve.radius();

  // f(t) = 0 iff the tangent line at X(t) passes through the apex.
  auto f = [&](double t) {
    Point<double> x = r * curve.unit_point(t);
    return orient(apex, HPoint<double>(x), HPoint<double>::direction(curve.tangent(t)));
  };

  constexpr std::size_t n = ParametricCurve::kDefaultSamples;
  std::vector<double> ts(n + 1), fs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    ts[i] = ParametricCurve::parameter(i, n);
    fs[i] = i == n ? fs[0] : f(ts[i]);
  }

  std::vector<double> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i] == 0) {
      roots.push_back(ts[i]);
      continue;
    }
    if ((fs[i] < 0) == (fs[i + 1] < 0) || fs[i + 1] == 0) continue;
    double lo = ts[i], hi = ts[i + 1];
    bool lo_negative = fs[i] < 0;
    while (hi - lo > 1e-12) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      double fm = f(mid);
      if (fm == 0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0) == lo_negative) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  if (roots.size() != 2) throw geometry_error("tangent search on curve found " + std::to_string(roots.size()) + " contacts, expected 2");

  std::array<Touch<double>, 2> out;
  std::array<bool, 2> filled{false, false};
  const HPoint<double> origin(0.0, 0.0, 1.0);
  for (double t : roots) {
    Point<double> x = r * curve.unit_point(t);
    int s = orient(apex, HPoint<double>(x), origin) > 0 ? 0 : 1;
    if (filled[s]) throw geometry_error("tangent search on curve found two contacts on one side");
    filled[s] = true;
    out[s] = Touch<double>{curve.point(t), {}, t};
  }
  return out;
}

template <Scalar T>
std::array<Touch<T>, 2> contacts_from(const Circle<T>& c, const HPoint<T>& from) {
  Boundary<T> b = c.boundary();
  if (auto* poly = std::get_if<Polygon<T>>(&b)) return polygon_contacts(*poly, from);
  if constexpr (is_exact_v<T>) {
    throw mode_error("curved circles have no exact tangents");
  } else {
    return curve_contacts(std::get<ParametricCurve>(b), from);
  }
}

}  // namespace detail

/// Both common external tangents of two disjoint circles.
///
/// The apex P_ij only selects the contact points: each tangent is the line
/// through the contact on circle i and the matching contact on circle j, so
/// the returned apex is an independent intersection of two constructed
/// lines.  Each line is checked to support both circles from one side.
template <Scalar T>
TangentPair<T> external_tangents(const Circle<T>& ci, const Circle<T>& cj) {
  PairRelation rel = relate(ci, cj);
  if (rel.containment) throw inadmissible_error("one circle lies inside the other");
  if (rel.overlap) throw inadmissible_error("circles overlap");

  HPoint<T> p = homothety_center(ci, cj);
  if (auto a = p.affine()) {
    if (classify(ci, *a) != Location::outside || classify(cj, *a) != Location::outside)
      throw inadmissible_error("apex is not exterior to both circles");
  }

  auto on_i = detail::contacts_from(ci, p);
  auto on_j = detail::contacts_from(cj, p);
  std::array<Line<T>, 2> lines{line_through(on_i[0].point, on_j[0].point), line_through(on_i[1].point, on_j[1].point)};
  for (const auto& l : lines) {
    if (!is_external_tangent(l, ci, cj)) throw geometry_error("constructed line is not a common external tangent");
  }
  HPoint<T> apex = intersect(lines[0], lines[1]);
  return TangentPair<T>{lines, std::move(on_i), std::move(on_j), apex};
}

/// Normalized distance between two float lines, insensitive to orientation.
inline double line_distance(const Line<double>& l, const Line<double>& m) {
  double same = std::max({std::fabs(l.a() - m.a()), std::fabs(l.b() - m.b()), std::fabs(l.c() - m.c())});
  double flip = std::max({std::fabs(l.a() + m.a()), std::fabs(l.b() + m.b()), std::fabs(l.c() + m.c())});
  return std::min(same, flip);
}

struct OracleTangents {
  std::array<Line<double>, 2> lines;
  std::array<double, 2> angles;  // normal angles, radians in [0, 2pi)
  HPoint<double> apex;
};

inline constexpr std::size_t kOracleDirections = 8192;

/// Independent tangent search.  Scans unit normals n and looks for
/// h_j(n) = h_i(n): exactly then the support line of circle i in direction
/// n also supports circle j from the same side.  Sign changes are refined by
/// bisection on the normal angle, candidates confirmed with
/// is_external_tangent at 1e-6, and roots closer than 1e-8 rad merged.
inline OracleTangents oracle_tangents(const Circle<double>& ci, const Circle<double>& cj,
                                      std::size_t n_dirs = kOracleDirections) {
  require_same_metric(ci, cj);
  if (n_dirs < 8) throw std::invalid_argument("oracle_tangents: too few directions");
  PairRelation rel = relate(ci, cj);
  if (rel.overlap || rel.containment) throw inadmissible_error("oracle_tangents: circles overlap");

  const double scale = tangency_tolerance(ci, cj, 1.0);
  auto normal = [](double th) { return Point<double>{std::cos(th), std::sin(th)}; };
  auto g = [&](double th) {
    Point<double> n = normal(th);
    return support_value(cj, n) - support_value(ci, n);
  };

  std::vector<double> ths(n_dirs + 1), gs(n_dirs + 1);
  for (std::size_t k = 0; k <= n_dirs; ++k) {
    ths[k] = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_dirs);
    gs[k] = k == n_dirs ? gs[0] : g(ths[k]);
  }

  std::vector<double> roots;
  for (std::size_t k = 0; k < n_dirs; ++k) {
    double root;
    if (gs[k] == 0) {
      root = ths[k];
    } else if ((gs[k] < 0) != (gs[k + 1] < 0) && gs[k + 1] != 0) {
      double lo = ths[k], hi = ths[k + 1];
      bool lo_negative = gs[k] < 0;
      root = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        root = 0.5 * (lo + hi);
        double gm = g(root);
        if (std::fabs(gm) < 1e-10 * scale || hi - lo < 1e-15) break;
        if ((gm < 0) == lo_negative) {
          lo = root;
        } else {
          hi = root;
        }
      }
    } else {
      continue;
    }
    Line<double> candidate = support_line(ci, normal(root)).line;
    if (!is_external_tangent(candidate, ci, cj, 1e-6 * scale)) continue;
    bool merged = false;
    for (double r : roots) {
      double gap = std::fabs(r - root);
      gap = std::min(gap, 2 * std::numbers::pi - gap);
      if (gap < 1e-8) merged = true;
    }
    if (!merged) roots.push_back(root);
  }
  if (roots.size() != 2)
    throw geometry_error("oracle_tangents found " + std::to_string(roots.size()) + " external tangents, expected 2");

  Line<double> l0 = support_line(ci, normal(roots[0])).line;
  Line<double> l1 = support_line(ci, normal(roots[1])).line;
  return OracleTangents{{l0, l1}, {roots[0], roots[1]}, intersect(l0, l1)};
}

inline OracleTangents oracle_tangents(const Circle<Rational>& ci, const Circle<Rational>& cj,
                                      std::size_t n_dirs = kOracleDirections) {
  return oracle_tangents(to_double(ci), to_double(cj), n_dirs);
}

}  // namespace mg
