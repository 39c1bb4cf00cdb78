#pragma once

// Number types shared by every module.  A computation runs either entirely
// on exact rationals or entirely on doubles; the choice is a template
// parameter, so mixing the two in one predicate does not compile.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace mg {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

template <typename T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

enum class ScalarMode { exact, floating };

inline const char* to_string(ScalarMode m) { return m == ScalarMode::exact ? "exact" : "float"; }

template <Scalar T>
inline constexpr ScalarMode mode_of = is_exact_v<T> ? ScalarMode::exact : ScalarMode::floating;

/// Base of every error raised by the library.
struct geometry_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic was requested for a quantity that is irrational.
struct mode_error : geometry_error {
  using geometry_error::geometry_error;
};

/// Coincident points, identical lines, all-zero determinants.
struct degenerate_error : geometry_error {
  using geometry_error::geometry_error;
};

/// Circle configuration violates a construction precondition.
struct inadmissible_error : geometry_error {
  using geometry_error::geometry_error;
};

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return static_cast<double>(v); }

template <Scalar T>
T abs_of(const T& v) {
  if constexpr (is_exact_v<T>) {
    return v < 0 ? T(-v) : v;
  } else {
    return std::fabs(v);
  }
}

template <Scalar T>
int sign_of(const T& v) {
  return (v > 0) - (v < 0);
}

/// Converts a double into T.  Exact for Rational: every finite double is a
/// dyadic rational.
template <Scalar T>
T from_double(double v) {
  if constexpr (is_exact_v<T>) {
    if (!std::isfinite(v)) throw mode_error("non-finite value has no rational form");
    return Rational(v);
  } else {
    return v;
  }
}

namespace detail {

inline Integer parse_integer_digits(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("empty number");
  Integer out = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad digit in number: " + std::string(digits));
    out = out * 10 + (ch - '0');
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "p/q", "p", or a plain decimal such as "-1.25" into an exact
/// rational.  Scientific notation is not accepted.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = detail::trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_integer_digits(detail::trim(s.substr(0, slash)));
    Integer den = detail::parse_integer_digits(detail::trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in " + std::string(text));
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw std::invalid_argument("bad rational literal " + std::string(text));
    Integer w = whole.empty() ? Integer(0) : detail::parse_integer_digits(whole);
    Integer f = frac.empty() ? Integer(0) : detail::parse_integer_digits(frac);
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(w * scale + f, scale);
  } else {
    value = Rational(detail::parse_integer_digits(s));
  }
  return negative ? Rational(-value) : value;
}

/// Parses a decimal or "p/q" literal into T; the float path goes through the
/// exact rational so "1/3" reads correctly in both modes.
template <Scalar T>
T parse_scalar(std::string_view text) {
  std::string_view s = detail::trim(text);
  if constexpr (is_exact_v<T>) {
    return parse_rational(s);
  } else {
    if (s.find('/') != std::string_view::npos) return to_double(parse_rational(s));
    std::string buf(s);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(buf, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number: " + buf);
    }
    if (used != buf.size()) throw std::invalid_argument("bad number: " + buf);
    return v;
  }
}

/// Canonical text: "p/q" or "p" for rationals, 17 significant digits for doubles.
inline std::string to_text(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline std::string to_text(double v, int digits = 17) {
  if (v == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

/// Decimal expansion of a rational, truncated after `max_digits` fractional
/// digits and trimmed of trailing zeros.
inline std::string decimal_string(const Rational& v, int max_digits = 30) {
  Integer num = numerator(v);
  Integer den = denominator(v);
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  Integer whole = num / den;
  Integer rem = num % den;
  out += whole.str();
  if (rem == 0) return out;
  out += '.';
  for (int i = 0; i < max_digits && rem != 0; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den));
    rem %= den;
  }
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return out;
}

}  // namespace mg
