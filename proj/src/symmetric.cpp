#include "steiner/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

double relative_gap(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

// Radii of an axial chain as (axial circle, companion, companion).
std::array<double, 3> axial_triple(const SteinerChain& chain) {
  std::size_t axis = 0;
  for (std::size_t i = 1; i < chain.circles.size(); ++i)
    if (std::abs(chain.circles[i].center.y()) < std::abs(chain.circles[axis].center.y())) axis = i;
  const std::size_t n = chain.circles.size();
  return {chain.circles[axis].radius, chain.circles[(axis + 1) % n].radius,
          chain.circles[(axis + n - 1) % n].radius};
}

double triple_gap(const std::array<double, 3>& printed, const std::array<double, 3>& solver) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, relative_gap(printed[i], solver[i]));
  return worst;
}

}  // namespace

std::string_view to_string(SymmetricKind kind) {
  switch (kind) {
    case SymmetricKind::AxialMax: return "axial-max";
    case SymmetricKind::AxialMin: return "axial-min";
    case SymmetricKind::AxialEven: return "axial";
    case SymmetricKind::Lateral: return "lateral";
  }
  return "unknown";
}

SteinerChain symmetric_chain(const Gauge& g, SymmetricKind kind) {
  const bool even = g.n % 2 == 0;
  const bool odd_kind = kind == SymmetricKind::AxialMax || kind == SymmetricKind::AxialMin;
  if (even == odd_kind)
    throw DomainError("symmetric_chain: kind " + std::string(to_string(kind)) +
                      " is not admissible for n = " + std::to_string(g.n));
  const bool at_zero = kind == SymmetricKind::AxialMax || kind == SymmetricKind::AxialEven;
  return chain_at_phase(g, at_zero ? 0.0 : std::numbers::pi / g.n);
}

AxialQuadruple axial_closed_form_n4(const Gauge& g) {
  if (g.n != 4) throw DomainError("axial_closed_form_n4: gauge must have n = 4");
  require_valid(g);
  const double side = 2.0 * g.R * g.r / (g.R - g.r);
  AxialQuadruple q;
  q.radii = {(g.R - g.d - g.r) / 2.0, side, (g.R + g.d - g.r) / 2.0, side};
  const double side_bend = (g.R - g.r) / (2.0 * g.R * g.r);
  q.bends = {2.0 / (g.R - g.d - g.r), side_bend, 2.0 / (g.R + g.d - g.r), side_bend};
  return q;
}

LateralChain lateral_chain_n4(const Gauge& g) {
  if (g.n != 4) throw DomainError("lateral_chain_n4: gauge must have n = 4");
  require_valid(g);
  const double Rr = g.R * g.r;
  const double mid = (g.R - g.r) / (2.0 * Rr);
  const double half_gap = g.d / (2.0 * std::numbers::sqrt2 * Rr);
  return {mid - half_gap, mid + half_gap, symmetric_chain(g, SymmetricKind::Lateral)};
}

double AxialTripleCheck::direct_pairing() const {
  return std::max(discrepancy[0][0], discrepancy[1][1]);
}

double AxialTripleCheck::swapped_pairing() const {
  return std::max(discrepancy[0][1], discrepancy[1][0]);
}

double AxialTripleCheck::max_relative_discrepancy() const {
  return std::min(direct_pairing(), swapped_pairing());
}

AxialTripleCheck axial_triples_n3_printed(const Gauge& g) {
  if (g.n != 3) throw DomainError("axial_triples_n3_printed: gauge must have n = 3");
  require_valid(g);
  const double R = g.R, r = g.r, d = g.d;

  AxialTripleCheck check;
  for (int i = 0; i < 2; ++i) {
    const double sign = i == 0 ? 1.0 : -1.0;
    const double span = R - r + sign * d;
    const double num = 4.0 * R * r * span;
    const double den = R * R - r * r - 4.0 * R * r + sign * d * (R - r);
    check.printed_radii[std::size_t(i)] = {span / 2.0, num / den, num / den};
    check.printed_bends[std::size_t(i)] = {2.0 / span, den / num, den / num};
  }
  check.solver_radii[0] = axial_triple(symmetric_chain(g, SymmetricKind::AxialMax));
  check.solver_radii[1] = axial_triple(symmetric_chain(g, SymmetricKind::AxialMin));

  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j)
      check.discrepancy[i][j] = triple_gap(check.printed_radii[i], check.solver_radii[j]);
    check.axial_entry_discrepancy[i] =
        relative_gap(check.printed_radii[i][0], check.solver_radii[i][0]);
  }
  return check;
}

AxialSixCheck axial_bends_n6(const Gauge& g) {
  if (g.n != 6) throw DomainError("axial_bends_n6: gauge must have n = 6");
  require_valid(g);
  const double R = g.R, r = g.r, d = g.d;

  const double big = 2.0 / (R + d - r);
  const double near_big =
      (3 * R * R + 3 * R * d - 2 * R * r - 3 * d * r + 3 * r * r) / (4 * R * r * (R - r + d));
  const double near_small =
      (3 * R * R - 3 * R * d - 2 * R * r + 3 * d * r + 3 * r * r) / (4 * R * r * (R - r - d));
  const double small = 2.0 / (R - r - d);

  AxialSixCheck check;
  check.printed_bends = {big, near_big, near_small, small, near_small, near_big};
  const SteinerChain chain = symmetric_chain(g, SymmetricKind::AxialEven);
  for (std::size_t i = 0; i < 6; ++i) {
    check.solver_bends[i] = chain.circles[i].bend();
    check.max_relative_discrepancy = std::max(
        check.max_relative_discrepancy, relative_gap(check.printed_bends[i], check.solver_bends[i]));
  }
  return check;
}

}  // namespace steiner
