#pragma once

// Monge points and Monge line of three circles, and a report that checks the
// theorem along two independent routes: the closed-form homothety centers,
// and the intersections of the actually constructed tangent lines.

#include "mg/tangents.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace mg {

/// Pair order used throughout: (1,2), (1,3), (2,3).
inline constexpr std::array<std::array<std::size_t, 2>, 3> kMongePairs{{{0, 1}, {0, 2}, {1, 2}}};

template <Scalar T>
using Triple = std::array<Circle<T>, 3>;

template <Scalar T>
void require_same_metric(const Triple<T>& cs) {
  require_same_metric(cs[0], cs[1]);
  require_same_metric(cs[0], cs[2]);
}

/// P_12, P_13, P_23.
template <Scalar T>
std::array<HPoint<T>, 3> monge_points(const Triple<T>& cs) {
  require_same_metric(cs);
  return {homothety_center(cs[0], cs[1]), homothety_center(cs[0], cs[2]), homothety_center(cs[1], cs[2])};
}

template <Scalar T>
struct MongeDeterminants {
  T dx;    // | x1 x2 x3 ; r1 r2 r3 ; 1 1 1 |
  T dy;    // | y1 y2 y3 ; r1 r2 r3 ; 1 1 1 |
  T dxyr;  // | x1 x2 x3 ; y1 y2 y3 ; r1 r2 r3 |
};

namespace detail {

template <Scalar T>
T det3(const std::array<T, 3>& r0, const std::array<T, 3>& r1, const std::array<T, 3>& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

}  // namespace detail

template <Scalar T>
MongeDeterminants<T> monge_determinants(const Triple<T>& cs) {
  std::array<T, 3> xs{cs[0].center().x, cs[1].center().x, cs[2].center().x};
  std::array<T, 3> ys{cs[0].center().y, cs[1].center().y, cs[2].center().y};
  std::array<T, 3> rs{cs[0].radius(), cs[1].radius(), cs[2].radius()};
  std::array<T, 3> ones{T(1), T(1), T(1)};
  return {detail::det3(xs, rs, ones), detail::det3(ys, rs, ones), detail::det3(xs, ys, rs)};
}

/// The Monge line D_x * y = D_y * x - D_xyr, i.e. (a, b, c) = (D_y, -D_x, -D_xyr).
/// With all radii equal it is the line at infinity.  Throws degenerate_error
/// when all three determinants vanish.
template <Scalar T>
Line<T> monge_line(const Triple<T>& cs) {
  require_same_metric(cs);
  auto d = monge_determinants(cs);
  if (d.dx == 0 && d.dy == 0 && d.dxyr == 0) throw degenerate_error("monge_line: all determinants vanish");
  return Line<T>(d.dy, T(-d.dx), T(-d.dxyr));
}

struct Admissibility {
  bool non_overlap = true;
  bool no_containment = true;
  bool distinct_radii = true;
  std::vector<std::string> reasons;

  /// Tangent construction is possible; equal radii are handled projectively.
  bool ok() const { return non_overlap && no_containment; }
};

template <Scalar T>
Admissibility check_admissibility(const Triple<T>& cs) {
  Admissibility adm;
  for (auto [i, j] : kMongePairs) {
    PairRelation rel = relate(cs[i], cs[j]);
    std::string tag = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    // Containment implies overlap; both are reported.
    if (rel.overlap) {
      adm.non_overlap = false;
      adm.reasons.push_back("overlap" + tag);
    }
    if (rel.containment) {
      adm.no_containment = false;
      adm.reasons.push_back("containment" + tag);
    }
    if (rel.equal_radii) adm.distinct_radii = false;
  }
  return adm;
}

/// Residuals are exact rationals in exact mode and scale-free doubles in
/// float mode; see geom.hpp for the definitions.  Entries that depend on the
/// tangent route are empty when it could not run.
template <Scalar T>
struct MongeResiduals {
  T collinearity_closed{};
  std::optional<T> collinearity_tangent;
  std::array<std::optional<T>, 3> apex_discrepancy;
  std::array<std::optional<T>, 3> line_incidence_closed;
  std::array<std::optional<T>, 3> line_incidence_tangent;
  std::array<T, 3> center_line_incidence{};
};

template <Scalar T>
struct MongeReport {
  Triple<T> circles;
  std::array<HPoint<T>, 3> apexes_closed;
  std::optional<std::array<HPoint<T>, 3>> apexes_tangent;
  std::optional<std::array<TangentPair<T>, 3>> tangents;
  std::optional<Line<T>> monge_line;
  MongeResiduals<T> residuals;
  Admissibility admissible;
  std::vector<std::string> notes;
  bool pass = false;

  static constexpr ScalarMode mode = mode_of<T>;
};

namespace detail {

template <Scalar T>
bool all_negligible(const MongeResiduals<T>& r) {
  auto ok = [](const std::optional<T>& v) { return !v || negligible(*v); };
  if (!negligible(r.collinearity_closed) || !ok(r.collinearity_tangent)) return false;
  for (int k = 0; k < 3; ++k) {
    if (!ok(r.apex_discrepancy[k]) || !ok(r.line_incidence_closed[k]) || !ok(r.line_incidence_tangent[k]) ||
        !negligible(r.center_line_incidence[k]))
      return false;
  }
  return true;
}

}  // namespace detail

/// Runs both routes and packages every residual.  Inadmissible input is
/// reported, not thrown; only a failed construction throws.
template <Scalar T>
MongeReport<T> verify_monge(const Triple<T>& cs) {
  require_same_metric(cs);
  MongeReport<T> rep{cs, monge_points(cs), std::nullopt, std::nullopt, std::nullopt, {}, check_admissibility(cs), {}, false};
  const auto& closed = rep.apexes_closed;

  for (std::size_t k = 0; k < 3; ++k) {
    auto [i, j] = kMongePairs[k];
    if (closed[k].at_infinity())
      rep.notes.push_back("equal_radii(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          "): homothety center at infinity, checked projectively");
    rep.residuals.center_line_incidence[k] = incidence_residual(line_through(cs[i].center(), cs[j].center()), closed[k]);
  }
  rep.residuals.collinearity_closed = collinearity_residual(closed[0], closed[1], closed[2]);

  try {
    rep.monge_line = monge_line(cs);
    if (rep.monge_line->at_infinity()) rep.notes.push_back("monge_line_at_infinity");
  } catch (const degenerate_error&) {
    rep.notes.push_back("monge_line_degenerate");
  }
  if (rep.monge_line) {
    for (std::size_t k = 0; k < 3; ++k) rep.residuals.line_incidence_closed[k] = incidence_residual(*rep.monge_line, closed[k]);
  }

  if (rep.admissible.ok()) {
    std::array<TangentPair<T>, 3> pairs{external_tangents(cs[0], cs[1]), external_tangents(cs[0], cs[2]),
                                        external_tangents(cs[1], cs[2])};
    std::array<HPoint<T>, 3> tangent_apex{pairs[0].apex, pairs[1].apex, pairs[2].apex};
    for (std::size_t k = 0; k < 3; ++k) {
      rep.residuals.apex_discrepancy[k] = projective_distance(closed[k], tangent_apex[k]);
      if (rep.monge_line) rep.residuals.line_incidence_tangent[k] = incidence_residual(*rep.monge_line, tangent_apex[k]);
    }
    rep.residuals.collinearity_tangent = collinearity_residual(tangent_apex[0], tangent_apex[1], tangent_apex[2]);
    rep.apexes_tangent = tangent_apex;
    rep.tangents = std::move(pairs);
  }

  rep.pass = rep.admissible.ok() && rep.apexes_tangent.has_value() && detail::all_negligible(rep.residuals);
  return rep;
}

}  // namespace mg
