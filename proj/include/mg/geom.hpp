#pragma once

// Affine and homogeneous points, lines, and the incidence predicates built
// on the 3x3 homogeneous determinant.

#include "mg/scalar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <ostream>

namespace mg {

/// Float-mode tolerance used by every "is zero" decision in the library.
inline constexpr double kFloatTolerance = 1e-9;

template <Scalar T>
struct Point {
  T x{};
  T y{};

  friend Point operator+(const Point& a, const Point& b) { return {T(a.x + b.x), T(a.y + b.y)}; }
  friend Point operator-(const Point& a, const Point& b) { return {T(a.x - b.x), T(a.y - b.y)}; }
  friend Point operator*(const T& s, const Point& a) { return {T(s * a.x), T(s * a.y)}; }
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

template <Scalar T>
T dot(const Point<T>& a, const Point<T>& b) {
  return a.x * b.x + a.y * b.y;
}

template <Scalar T>
T cross(const Point<T>& a, const Point<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <Scalar T>
T max_norm(const Point<T>& a) {
  return std::max(abs_of(a.x), abs_of(a.y));
}

inline Point<double> to_double(const Point<Rational>& p) { return {to_double(p.x), to_double(p.y)}; }
inline Point<double> to_double(const Point<double>& p) { return p; }

/// Homogeneous point (x : y : w).  w == 0 is a point at infinity, i.e. a
/// direction; this is how parallel tangent pairs get an intersection.
template <Scalar T>
class HPoint {
 public:
  HPoint(T x, T y, T w) : x_(std::move(x)), y_(std::move(y)), w_(std::move(w)) {
    if (x_ == 0 && y_ == 0 && w_ == 0) throw degenerate_error("homogeneous point (0:0:0) is undefined");
  }
  explicit HPoint(const Point<T>& p) : HPoint(p.x, p.y, T(1)) {}

  static HPoint direction(const Point<T>& d) { return HPoint(d.x, d.y, T(0)); }

  const T& x() const { return x_; }
  const T& y() const { return y_; }
  const T& w() const { return w_; }

  bool at_infinity() const { return w_ == 0; }

  std::optional<Point<T>> affine() const {
    if (at_infinity()) return std::nullopt;
    return Point<T>{T(x_ / w_), T(y_ / w_)};
  }

  /// Projective equality: all 2x2 cross products of the coordinate vectors vanish.
  friend bool operator==(const HPoint& p, const HPoint& q) {
    return p.x_ * q.w_ == q.x_ * p.w_ && p.y_ * q.w_ == q.y_ * p.w_ && p.x_ * q.y_ == q.x_ * p.y_;
  }

 private:
  T x_, y_, w_;
};

inline HPoint<double> to_double(const HPoint<Rational>& p) {
  return {to_double(p.x()), to_double(p.y()), to_double(p.w())};
}
inline HPoint<double> to_double(const HPoint<double>& p) { return p; }

/// Line a*x + b*y + c*w = 0.  (0, 0, c) is the line at infinity.
///
/// Float lines are stored with a^2 + b^2 = 1 (or |c| = 1 for the line at
/// infinity).  Exact lines are scaled so the first nonzero coefficient has
/// magnitude one.  Both normalizations preserve the sign, so the side a
/// point falls on is meaningful.
template <Scalar T>
class Line {
 public:
  Line(T a, T b, T c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0 && c_ == 0) throw degenerate_error("line (0, 0, 0) is undefined");
    normalize();
  }

  const T& a() const { return a_; }
  const T& b() const { return b_; }
  const T& c() const { return c_; }

  bool at_infinity() const { return a_ == 0 && b_ == 0; }
  Point<T> normal() const { return {a_, b_}; }

  /// Signed value a*x + b*y + c at an affine point.
  T eval(const Point<T>& p) const { return a_ * p.x + b_ * p.y + c_; }

  friend bool operator==(const Line& l, const Line& m) {
    return l.a_ * m.b_ == m.a_ * l.b_ && l.a_ * m.c_ == m.a_ * l.c_ && l.b_ * m.c_ == m.b_ * l.c_;
  }

 private:
  void normalize() {
    if constexpr (is_exact_v<T>) {
      T lead = a_ != 0 ? abs_of(a_) : (b_ != 0 ? abs_of(b_) : abs_of(c_));
      a_ /= lead;
      b_ /= lead;
      c_ /= lead;
    } else {
      double n = at_infinity() ? std::fabs(c_) : std::hypot(a_, b_);
      a_ /= n;
      b_ /= n;
      c_ /= n;
    }
  }

  T a_, b_, c_;
};

inline Line<double> to_double(const Line<Rational>& l) { return {to_double(l.a()), to_double(l.b()), to_double(l.c())}; }
inline Line<double> to_double(const Line<double>& l) { return l; }

/// Determinant of the 3x3 matrix whose rows are p, q, r.  Zero iff the three
/// points are collinear.  For affine inputs (w = 1) it is twice the signed
/// area of the triangle, positive when counterclockwise.
template <Scalar T>
T orient(const HPoint<T>& p, const HPoint<T>& q, const HPoint<T>& r) {
  return p.x() * (q.y() * r.w() - q.w() * r.y()) - p.y() * (q.x() * r.w() - q.w() * r.x()) +
         p.w() * (q.x() * r.y() - q.y() * r.x());
}

template <Scalar T>
T orient(const Point<T>& p, const Point<T>& q, const Point<T>& r) {
  return cross(q - p, r - p);
}

namespace detail {

template <Scalar T>
std::array<T, 3> cross3(const T& ax, const T& ay, const T& aw, const T& bx, const T& by, const T& bw) {
  return {T(ay * bw - aw * by), T(aw * bx - ax * bw), T(ax * by - ay * bx)};
}

}  // namespace detail

template <Scalar T>
Line<T> line_through(const HPoint<T>& p, const HPoint<T>& q) {
  auto [a, b, c] = detail::cross3(p.x(), p.y(), p.w(), q.x(), q.y(), q.w());
  if (a == 0 && b == 0 && c == 0) throw degenerate_error("line_through: points coincide");
  return Line<T>(a, b, c);
}

template <Scalar T>
Line<T> line_through(const Point<T>& p, const Point<T>& q) {
  return line_through(HPoint<T>(p), HPoint<T>(q));
}

/// Intersection point; at infinity (w = 0) for parallel lines.
template <Scalar T>
HPoint<T> intersect(const Line<T>& l, const Line<T>& m) {
  auto [x, y, w] = detail::cross3(l.a(), l.b(), l.c(), m.a(), m.b(), m.c());
  if (x == 0 && y == 0 && w == 0) throw degenerate_error("intersect: lines are identical");
  return HPoint<T>(x, y, w);
}

template <Scalar T>
T incidence(const Line<T>& l, const HPoint<T>& p) {
  return l.a() * p.x() + l.b() * p.y() + l.c() * p.w();
}

/// Representative with w = 1 for finite points; for points at infinity the
/// direction scaled to max-norm one with its first nonzero coordinate positive.
template <Scalar T>
HPoint<T> canonical(const HPoint<T>& p) {
  if (!p.at_infinity()) return HPoint<T>(T(p.x() / p.w()), T(p.y() / p.w()), T(1));
  T n = std::max(abs_of(p.x()), abs_of(p.y()));
  if ((p.x() != 0 ? p.x() : p.y()) < 0) n = -n;
  return HPoint<T>(T(p.x() / n), T(p.y() / n), T(0));
}

template <Scalar T>
T coordinate_magnitude(const HPoint<T>& canon) {
  return std::max(abs_of(canon.x()), abs_of(canon.y()));
}

/// Scale-free collinearity residual |orient| / (1 + M)^3, with M the largest
/// coordinate magnitude among the canonical representatives.
template <Scalar T>
T collinearity_residual(const HPoint<T>& p, const HPoint<T>& q, const HPoint<T>& r) {
  HPoint<T> cp = canonical(p), cq = canonical(q), cr = canonical(r);
  T m = T(1) + std::max({coordinate_magnitude(cp), coordinate_magnitude(cq), coordinate_magnitude(cr)});
  return T(abs_of(orient(cp, cq, cr)) / (m * m * m));
}

/// Distance from a point to a line relative to the point's magnitude.  For a
/// point at infinity it measures how far the direction is from parallel.
template <Scalar T>
T incidence_residual(const Line<T>& l, const HPoint<T>& p) {
  HPoint<T> cp = canonical(p);
  T scale = l.at_infinity() ? abs_of(l.c()) : std::max(abs_of(l.a()), abs_of(l.b()));
  T v = abs_of(incidence(l, cp)) / scale;
  if (cp.at_infinity()) return v;
  return T(v / (T(1) + coordinate_magnitude(cp)));
}

/// Relative distance between two projective points.  Finite pairs use the
/// max-norm gap divided by (1 + larger magnitude); otherwise the max-norm of
/// the cross product of the max-norm-scaled coordinate vectors.
template <Scalar T>
T projective_distance(const HPoint<T>& p, const HPoint<T>& q) {
  if (!p.at_infinity() && !q.at_infinity()) {
    HPoint<T> cp = canonical(p), cq = canonical(q);
    T gap = std::max(abs_of(T(cp.x() - cq.x())), abs_of(T(cp.y() - cq.y())));
    return T(gap / (T(1) + std::max(coordinate_magnitude(cp), coordinate_magnitude(cq))));
  }
  auto scaled = [](const HPoint<T>& h) {
    T n = std::max({abs_of(h.x()), abs_of(h.y()), abs_of(h.w())});
    return std::array<T, 3>{T(h.x() / n), T(h.y() / n), T(h.w() / n)};
  };
  auto u = scaled(p);
  auto v = scaled(q);
  auto c = detail::cross3(u[0], u[1], u[2], v[0], v[1], v[2]);
  return std::max({abs_of(c[0]), abs_of(c[1]), abs_of(c[2])});
}

/// True when a residual counts as zero: exactly for rationals, below the
/// float tolerance otherwise.
template <Scalar T>
bool negligible(const T& residual, double tol = kFloatTolerance) {
  if constexpr (is_exact_v<T>) {
    return residual == 0;
  } else {
    return std::fabs(residual) < tol;
  }
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Point<T>& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const HPoint<T>& p) {
  return os << '(' << p.x() << " : " << p.y() << " : " << p.w() << ')';
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Line<T>& l) {
  return os << '[' << l.a() << ", " << l.b() << ", " << l.c() << ']';
}

}  // namespace mg
