#include "steiner/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "steiner/errors.hpp"
#include "steiner/invariants.hpp"
#include "steiner/porism.hpp"

namespace steiner {

namespace {

constexpr double kRelationTolerance = 1e-6;
constexpr double kRangeMargin = 1e-9;
constexpr double kAdjacencyTolerance = 1e-6;

}  // namespace

ActualMoments actual_moments(const RadiusQuadruple& radii) {
  ActualMoments m;
  for (double r : radii) {
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidInput("radii must be positive and finite");
    const double b = 1.0 / r;
    m.I1 += b;
    m.I2 += b * b;
    m.I3 += b * b * b;
  }
  return m;
}

VirtualGaugeResult virtual_gauge(double I1, double I2) {
  VirtualGaugeResult out;
  // 16 a^2 - 8 I1 a + (8 I2 - 3 I1^2) = 0 has discriminant 256 (I1^2 - 2 I2).
  const double disc = I1 * I1 - 2.0 * I2;
  if (disc < 0.0) {
    out.reason = "parent-bend quadratic has no real roots";
    return out;
  }
  const double half_root = std::sqrt(disc) / 2.0;
  const double a = I1 / 4.0 + half_root;
  const double A = I1 / 2.0 - a;
  out.roots = std::array<double, 2>{a, A};
  if (!(a > 0.0 && A < 0.0)) {
    out.reason = "parent-bend roots do not have opposite signs";
    return out;
  }

  VirtualGauge v;
  v.a = a;
  v.A = A;
  v.r = 1.0 / a;
  v.R = -1.0 / A;
  const double squares = v.R * v.R + v.r * v.r;
  double radicand = squares - 6.0 * v.R * v.r;
  if (std::abs(radicand) <= 64.0 * std::numeric_limits<double>::epsilon() * squares) radicand = 0.0;
  if (radicand < 0.0) {
    if (radicand < -kRangeMargin * v.R * v.R) {
      out.reason = "virtual parents violate the Pedoe relation";
      return out;
    }
    radicand = 0.0;
  }
  v.d = std::sqrt(radicand);
  out.gauge = v;
  return out;
}

std::string_view to_string(FeasibilityMode mode) {
  return mode == FeasibilityMode::Paper ? "paper" : "constructive";
}

FeasibilityReport feasibility_check(const RadiusQuadruple& radii, FeasibilityMode mode) {
  FeasibilityReport rep;
  rep.radii = radii;
  rep.mode = mode;
  rep.moments = actual_moments(radii);
  rep.virtual_parents = virtual_gauge(rep.moments.I1, rep.moments.I2);

  auto fail = [&rep](const std::string& why) {
    if (rep.reason.empty()) rep.reason = why;
  };

  if (!rep.virtual_parents.gauge) fail(rep.virtual_parents.reason);

  bool in_range = false;
  if (rep.virtual_parents.gauge) {
    const VirtualGauge& v = *rep.virtual_parents.gauge;
    const Gauge g{4, v.R, v.r, v.d};
    const PoristicRange range = poristic_range(g);
    const double margin = kRangeMargin * v.R;
    std::array<bool, 4> check{};
    for (std::size_t i = 0; i < 4; ++i)
      check[i] = radii[i] >= range.min_radius - margin && radii[i] <= range.max_radius + margin;
    rep.range_check = check;
    in_range = std::all_of(check.begin(), check.end(), [](bool b) { return b; });
    if (!in_range) fail("radius outside the virtual poristic range");
  }

  const ActualMoments& m = rep.moments;
  rep.relation_residual = third_moment_relation_residual(m.I1, m.I2, m.I3);
  rep.relation_ok = std::abs(rep.relation_residual) < kRelationTolerance * std::max(1.0, std::abs(m.I3));
  if (!rep.relation_ok) fail("third-moment relation violated");

  if (mode == FeasibilityMode::Constructive && rep.virtual_parents.gauge) {
    const VirtualGauge& v = *rep.virtual_parents.gauge;
    const Gauge g{4, v.R, v.r, v.d};
    std::array<bool, 4> check{};
    for (std::size_t i = 0; i < 4; ++i) {
      try {
        const NeighborBends roots = neighbor_bends(g, radii[i]);
        double lo = 1.0 / radii[(i + 3) % 4];
        double hi = 1.0 / radii[(i + 1) % 4];
        if (lo > hi) std::swap(lo, hi);
        const double scale = std::max(std::abs(roots.minus), std::abs(roots.plus));
        check[i] = std::abs(lo - roots.minus) <= kAdjacencyTolerance * scale &&
                   std::abs(hi - roots.plus) <= kAdjacencyTolerance * scale;
      } catch (const DomainError&) {
        check[i] = false;
      }
    }
    rep.adjacency_check = check;
    if (!std::all_of(check.begin(), check.end(), [](bool b) { return b; }))
      fail("neighbours disagree with the neighbour-bend quadratic");
  }

  rep.feasible = rep.reason.empty();
  return rep;
}

}  // namespace steiner
