#pragma once

// Randomized check of the Monge theorem.  Each trial draws an admissible
// triple (lattice centers, radii n/d with d <= 8, pairwise distinct), runs
// verify_monge and records the residuals.  Trial i uses its own generator
// seeded from (seed, i), so results do not depend on thread count.

#include "mg/io.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace mg {

enum class FuzzFamily { alpha, lp, euclidean };

inline const char* to_string(FuzzFamily f) {
  switch (f) {
    case FuzzFamily::alpha:
      return "alpha";
    case FuzzFamily::lp:
      return "lp";
    case FuzzFamily::euclidean:
      return "euclidean";
  }
  return "?";
}

inline FuzzFamily parse_family(std::string_view s) {
  if (s == "alpha") return FuzzFamily::alpha;
  if (s == "lp") return FuzzFamily::lp;
  if (s == "euclidean") return FuzzFamily::euclidean;
  throw std::invalid_argument("unknown fuzz family \"" + std::string(s) + "\" (alpha, lp, euclidean)");
}

struct FuzzConfig {
  FuzzFamily family = FuzzFamily::alpha;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::int64_t coord_range = 20;  // centers in [-range, range]^2
  std::int64_t radius_max = 6;    // radii in (0, radius_max]
  unsigned threads = 1;

  void validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (coord_range < 1) throw std::invalid_argument("coordinate range must be positive");
    if (radius_max < 1) throw std::invalid_argument("radius range must be positive");
    if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  }
};

struct TrialResult {
  std::size_t index = 0;
  RawInstance instance;
  bool pass = false;
  std::string failure;
  double collinearity = 0;
  double apex_discrepancy = 0;
  double line_incidence = 0;
};

struct FuzzSummary {
  FuzzConfig config;
  std::vector<TrialResult> trials;  // sorted by index

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) { return !t.pass; }));
  }
  double max_collinearity() const { return max_of(&TrialResult::collinearity); }
  double max_apex_discrepancy() const { return max_of(&TrialResult::apex_discrepancy); }
  double max_line_incidence() const { return max_of(&TrialResult::line_incidence); }

 private:
  double max_of(double TrialResult::*field) const {
    double m = 0;
    for (const auto& t : trials) m = std::max(m, t.*field);
    return m;
  }
};

namespace detail {

/// Uniform-ish draw in [0, n) by modulo; the bias is below 2^-50 for the
/// small ranges used here and keeps the stream portable across libraries.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline std::int64_t draw_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t(index) >> 32)};
  return std::mt19937_64(seq);
}

inline std::string draw_metric(std::mt19937_64& rng, FuzzFamily family) {
  switch (family) {
    case FuzzFamily::alpha: {
      std::int64_t q = draw_in(rng, 1, 16);
      Rational k(q + draw_in(rng, 1, q), q);
      return "alpha-k:" + numerator(k).str() + "/" + denominator(k).str();
    }
    case FuzzFamily::lp: {
      static constexpr std::array<const char*, 6> ps{"lp:1", "lp:1.5", "lp:2", "lp:3", "lp:7", "lp:inf"};
      return ps[draw(rng, ps.size())];
    }
    case FuzzFamily::euclidean:
      return "euclidean";
  }
  throw std::logic_error("unreachable");
}

template <Scalar T>
bool usable(const RawInstance& raw) {
  auto inst = build_instance<T>(raw, 3);
  Triple<T> cs = as_triple(inst);
  Admissibility adm = check_admissibility(cs);
  return adm.ok() && adm.distinct_radii;
}

inline RawInstance draw_instance(std::mt19937_64& rng, const FuzzConfig& cfg) {
  RawInstance raw;
  raw.metric = draw_metric(rng, cfg.family);
  raw.mode = cfg.family == FuzzFamily::alpha ? ScalarMode::exact : ScalarMode::floating;
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    raw.circles.clear();
    for (int c = 0; c < 3; ++c) {
      std::int64_t x = draw_in(rng, -cfg.coord_range, cfg.coord_range);
      std::int64_t y = draw_in(rng, -cfg.coord_range, cfg.coord_range);
      std::int64_t den = draw_in(rng, 1, 8);
      Rational r(draw_in(rng, 1, cfg.radius_max * den), den);
      raw.circles.push_back({std::to_string(x), std::to_string(y), to_text(r)});
    }
    bool ok = raw.mode == ScalarMode::exact ? usable<Rational>(raw) : usable<double>(raw);
    if (ok) return raw;
  }
  throw std::runtime_error("fuzz: could not draw an admissible triple; widen the coordinate range");
}

template <Scalar T>
void check_trial(TrialResult& out) {
  auto rep = verify_monge(as_triple(build_instance<T>(out.instance, 3)));
  const auto& r = rep.residuals;
  auto d = [](const std::optional<T>& v) { return v ? to_double(*v) : 0.0; };
  out.collinearity = std::max(to_double(r.collinearity_closed), d(r.collinearity_tangent));
  for (std::size_t k = 0; k < 3; ++k) {
    out.apex_discrepancy = std::max(out.apex_discrepancy, d(r.apex_discrepancy[k]));
    out.line_incidence = std::max({out.line_incidence, d(r.line_incidence_closed[k]), d(r.line_incidence_tangent[k])});
  }
  out.pass = rep.pass;
  if (!rep.pass) out.failure = "verification failed";
}

}  // namespace detail

inline TrialResult run_trial(const FuzzConfig& cfg, std::size_t index) {
  auto rng = detail::trial_engine(cfg.seed, index);
  TrialResult t;
  t.index = index;
  t.instance = detail::draw_instance(rng, cfg);
  try {
    if (t.instance.mode == ScalarMode::exact) {
      detail::check_trial<Rational>(t);
    } else {
      detail::check_trial<double>(t);
    }
  } catch (const std::exception& e) {
    t.pass = false;
    t.failure = e.what();
  }
  return t;
}

inline FuzzSummary run_fuzz(const FuzzConfig& cfg) {
  cfg.validate();
  FuzzSummary s{cfg, std::vector<TrialResult>(cfg.trials)};
  unsigned n = std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials));
  if (n <= 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) s.trials[i] = run_trial(cfg, i);
    return s;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < n; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cfg.trials; i += n) s.trials[i] = run_trial(cfg, i);
    });
  }
  for (auto& t : pool) t.join();
  return s;
}

namespace detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace detail

/// Summary text; failing instances are echoed as one-line JSON that can be
/// saved and replayed with `mg monge`.
inline std::string format_summary(const FuzzSummary& s) {
  std::string out;
  out += "family: " + std::string(to_string(s.config.family)) + "\n";
  out += "seed: " + std::to_string(s.config.seed) + "\n";
  out += "trials: " + std::to_string(s.trials.size()) + "\n";
  out += "failures: " + std::to_string(s.failures()) + "\n";
  out += "max_collinearity_residual: " + detail::sci(s.max_collinearity()) + "\n";
  out += "max_apex_discrepancy: " + detail::sci(s.max_apex_discrepancy()) + "\n";
  out += "max_line_incidence: " + detail::sci(s.max_line_incidence()) + "\n";
  for (const auto& t : s.trials) {
    if (t.pass) continue;
    out += "failed trial " + std::to_string(t.index) + " (" + t.failure + "): " + to_json(t.instance).dump() + "\n";
  }
  return out;
}

}  // namespace mg
