#pragma once

#include <array>
#include <string_view>

#include "steiner/porism.hpp"

namespace steiner {

// AxialMax/AxialMin exist for odd n, AxialEven/Lateral for even n.
enum class SymmetricKind { AxialMax, AxialMin, AxialEven, Lateral };

std::string_view to_string(SymmetricKind kind);

// Phase 0 for the axial chain holding r^* (on the +x side); phase pi/n for
// the other one. Throws DomainError when the kind does not match the parity of n.
SteinerChain symmetric_chain(const Gauge& g, SymmetricKind kind);

struct AxialQuadruple {
  std::array<double, 4> radii{};  // (r_*, 2Rr/(R-r), r^*, 2Rr/(R-r))
  std::array<double, 4> bends{};
};

AxialQuadruple axial_closed_form_n4(const Gauge& g);

struct LateralChain {
  double b_minus = 0.0;
  double b_plus = 0.0;
  SteinerChain chain;
};

// Lateral bends (R-r)/(2Rr) -/+ d/(2 sqrt(2) Rr) together with the lateral
// chain itself (phase pi/4).
LateralChain lateral_chain_n4(const Gauge& g);

// Published radius triples for the two axial 3-chains next to the triples the
// geometric construction produces. Each triple is (axial circle, companion,
// companion).
struct AxialTripleCheck {
  std::array<std::array<double, 3>, 2> printed_radii{};
  std::array<std::array<double, 3>, 2> printed_bends{};
  std::array<std::array<double, 3>, 2> solver_radii{};  // [0] holds r^*, [1] holds r_*

  // Largest relative radius discrepancy for printed[i] against solver[j].
  std::array<std::array<double, 2>, 2> discrepancy{};
  // Relative discrepancy of the axial entries alone (printed[i][0] vs solver[i][0]).
  std::array<double, 2> axial_entry_discrepancy{};

  double direct_pairing() const;   // printed[0]<->solver[0], printed[1]<->solver[1]
  double swapped_pairing() const;  // printed[0]<->solver[1], printed[1]<->solver[0]
  double max_relative_discrepancy() const;  // best of the two pairings
  bool discrepant(double tol = 1e-9) const { return max_relative_discrepancy() > tol; }
};

AxialTripleCheck axial_triples_n3_printed(const Gauge& g);

// Published bends of the axial 6-chain, compared entry by entry with the
// chain at phase 0.
struct AxialSixCheck {
  std::array<double, 6> printed_bends{};
  std::array<double, 6> solver_bends{};
  double max_relative_discrepancy = 0.0;

  bool discrepant(double tol = 1e-9) const { return max_relative_discrepancy > tol; }
};

AxialSixCheck axial_bends_n6(const Gauge& g);

}  // namespace steiner
