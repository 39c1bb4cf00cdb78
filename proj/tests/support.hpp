#pragma once

// Random generators shared by the property tests.

#include "mg/mg.hpp"

#include <cstdint>
#include <random>

namespace mg::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// p/q with |p| <= bound * q and q in [1, max_den].
  Rational rational(std::int64_t bound, std::int64_t max_den = 12) {
    std::int64_t q = integer(1, max_den);
    return Rational(integer(-bound * q, bound * q), q);
  }

  Rational positive_rational(std::int64_t bound, std::int64_t max_den = 12) {
    std::int64_t q = integer(1, max_den);
    return Rational(integer(1, bound * q), q);
  }

  Point<Rational> rational_point(std::int64_t bound) { return {rational(bound), rational(bound)}; }
  Point<double> real_point(double bound) { return {real(-bound, bound), real(-bound, bound)}; }

  /// k in (1, 2] with small denominators.
  Rational alpha_k() {
    std::int64_t q = integer(1, 16);
    return Rational(q + integer(1, q), q);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mg::testing
