#pragma once

// Distance functions of the alpha family (taxicab, Chinese checker, ...,
// towards the maximum metric) and of the l_p family.

#include "mg/geom.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mg {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Family { euclidean, alpha, lp };

/// Largest absolute coordinate difference.
template <Scalar T>
T delta_max(const Point<T>& a, const Point<T>& b) {
  return std::max(abs_of(T(a.x - b.x)), abs_of(T(a.y - b.y)));
}

/// Smallest absolute coordinate difference.
template <Scalar T>
T delta_min(const Point<T>& a, const Point<T>& b) {
  return std::min(abs_of(T(a.x - b.x)), abs_of(T(a.y - b.y)));
}

/// k = 1 + sec(alpha) - tan(alpha), the diagonal parameter of the alpha
/// unit octagon.  alpha in [0, pi/2).
inline double k_from_angle(double alpha) {
  if (!(alpha >= 0 && alpha < std::numbers::pi / 2))
    throw std::invalid_argument("alpha must lie in [0, pi/2), got " + to_text(alpha));
  return 1.0 + 1.0 / std::cos(alpha) - std::tan(alpha);
}

/// p-norm of a vector; p may be kInfinity.  Exact mode supports p = 1 and
/// p = infinity only.
template <Scalar T>
T lp_norm(std::span<const T> v, double p) {
  if (!(p >= 1)) throw std::invalid_argument("lp_norm needs p >= 1, got " + to_text(p));
  if (p == kInfinity) {
    T m = 0;
    for (const T& x : v) m = std::max(m, abs_of(x));
    return m;
  }
  if (p == 1) {
    T s = 0;
    for (const T& x : v) s += abs_of(x);
    return s;
  }
  if constexpr (is_exact_v<T>) {
    throw mode_error("exact lp_norm is only defined for p = 1 and p = inf");
  } else {
    double m = 0;
    for (double x : v) m = std::max(m, std::fabs(x));
    if (m == 0) return 0;
    if (p == 2) {
      double s = 0;
      for (double x : v) s += (x / m) * (x / m);
      return m * std::sqrt(s);
    }
    double s = 0;
    for (double x : v) s += std::pow(std::fabs(x) / m, p);
    return m * std::pow(s, 1.0 / p);
  }
}

/// A planar metric of the alpha or l_p family (Euclidean is l_2 with its own
/// name).  Immutable.
template <Scalar T>
class Metric {
 public:
  static Metric euclidean() {
    if constexpr (is_exact_v<T>) throw mode_error("the euclidean metric has no exact mode");
    return Metric(Family::euclidean, T(0), 2.0, std::nullopt);
  }

  /// Alpha metric from its octagon parameter k in (1, 2].
  static Metric alpha_k(T k) {
    if (!(k > 1 && k <= 2)) throw std::invalid_argument("alpha-k parameter must lie in (1, 2], got " + text_of(k));
    return Metric(Family::alpha, std::move(k), 0.0, std::nullopt);
  }

  /// Alpha metric from the angle alpha in [0, pi/2).  Float only: k is
  /// irrational for almost every angle.
  static Metric alpha_angle(double alpha) {
    if constexpr (is_exact_v<T>) {
      throw mode_error("alpha given as an angle has no exact mode; use alpha-k:<p/q>");
    } else {
      double k = k_from_angle(alpha);
      if (!(k > 1)) throw std::invalid_argument("alpha too close to pi/2: k rounds to 1");
      return Metric(Family::alpha, k, 0.0, alpha);
    }
  }

  static Metric lp(double p) {
    if (!(p >= 1)) throw std::invalid_argument("lp metric needs p >= 1, got " + to_text(p));
    if constexpr (is_exact_v<T>) {
      if (p != 1 && p != kInfinity) throw mode_error("exact mode supports lp only for p = 1 and p = inf");
    }
    return Metric(Family::lp, T(0), p, std::nullopt);
  }

  Family family() const { return family_; }
  /// Octagon parameter; meaningful for the alpha family only.
  const T& k() const { return k_; }
  /// Exponent; 2 for euclidean, meaningful for lp.
  double p() const { return p_; }
  std::optional<double> angle() const { return angle_; }

  /// Circles of this metric are polygons (alpha family, l_1, l_inf).
  bool polygonal() const {
    return family_ == Family::alpha || (family_ == Family::lp && (p_ == 1 || p_ == kInfinity));
  }

  /// d_alpha = Delta + (k - 1) * delta; l_p from the coordinate differences.
  T distance(const Point<T>& a, const Point<T>& b) const {
    switch (family_) {
      case Family::alpha:
        return delta_max(a, b) + (k_ - 1) * delta_min(a, b);
      case Family::euclidean:
        if constexpr (is_exact_v<T>) {
          throw mode_error("the euclidean metric has no exact mode");
        } else {
          return std::hypot(delta_max(a, b), delta_min(a, b));
        }
      case Family::lp: {
        std::array<T, 2> d{T(a.x - b.x), T(a.y - b.y)};
        return lp_norm<T>(d, p_);
      }
    }
    return T(0);
  }

  T norm(const Point<T>& v) const { return distance(Point<T>{}, v); }

  /// Textual form accepted by parse_metric.
  std::string name() const {
    switch (family_) {
      case Family::euclidean:
        return "euclidean";
      case Family::alpha:
        if (angle_) return "alpha:" + to_text(*angle_);
        return "alpha-k:" + text_of(k_);
      case Family::lp:
        return p_ == kInfinity ? "lp:inf" : "lp:" + to_text(p_);
    }
    return {};
  }

  friend bool operator==(const Metric& m, const Metric& n) {
    return m.family_ == n.family_ && m.k_ == n.k_ && m.p_ == n.p_;
  }

 private:
  Metric(Family f, T k, double p, std::optional<double> angle)
      : family_(f), k_(std::move(k)), p_(p), angle_(angle) {}

  static std::string text_of(const T& v) { return to_text(v); }

  Family family_;
  T k_;
  double p_;
  std::optional<double> angle_;
};

inline Metric<double> to_double(const Metric<Rational>& m) {
  switch (m.family()) {
    case Family::euclidean:
      return Metric<double>::euclidean();
    case Family::alpha:
      return Metric<double>::alpha_k(to_double(m.k()));
    case Family::lp:
      return Metric<double>::lp(m.p());
  }
  throw std::logic_error("unreachable");
}
inline const Metric<double>& to_double(const Metric<double>& m) { return m; }

/// Parses `euclidean`, `alpha:<radians>`, `alpha-k:<p/q>`, `lp:<p>`, `lp:inf`.
/// Throws mode_error when the metric cannot be represented exactly in T.
template <Scalar T>
Metric<T> parse_metric(std::string_view text) {
  text = detail::trim(text);
  if (text == "euclidean") return Metric<T>::euclidean();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown metric: " + std::string(text));
  std::string_view head = text.substr(0, colon);
  std::string_view arg = detail::trim(text.substr(colon + 1));
  if (head == "alpha-k") return Metric<T>::alpha_k(parse_scalar<T>(arg));
  if (head == "alpha") return Metric<T>::alpha_angle(parse_scalar<double>(arg));
  if (head == "lp") {
    if (arg == "inf" || arg == "infinity") return Metric<T>::lp(kInfinity);
    return Metric<T>::lp(parse_scalar<double>(arg));
  }
  throw std::invalid_argument("unknown metric: " + std::string(text));
}

}  // namespace mg
