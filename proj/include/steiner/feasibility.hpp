#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace steiner {

using RadiusQuadruple = std::array<double, 4>;

struct ActualMoments {
  double I1 = 0.0;
  double I2 = 0.0;
  double I3 = 0.0;
};

// Moments of the bends 1/r_i; throws InvalidInput on a non-positive radius.
ActualMoments actual_moments(const RadiusQuadruple& radii);

struct VirtualGauge {
  double a = 0.0;  // inner parent bend, 1/r
  double A = 0.0;  // outer parent bend, -1/R
  double R = 0.0;
  double r = 0.0;
  double d = 0.0;
};

struct VirtualGaugeResult {
  std::optional<VirtualGauge> gauge;
  std::optional<std::array<double, 2>> roots;  // roots of the parent-bend quadratic, if real
  std::string reason;                          // set when gauge is empty
};

// Parent circles of order 4 whose first two bending moments are (I1, I2).
VirtualGaugeResult virtual_gauge(double I1, double I2);

enum class FeasibilityMode { Paper, Constructive };

std::string_view to_string(FeasibilityMode mode);

struct FeasibilityReport {
  RadiusQuadruple radii{};
  FeasibilityMode mode = FeasibilityMode::Paper;
  ActualMoments moments;
  VirtualGaugeResult virtual_parents;
  std::optional<std::array<bool, 4>> range_check;
  double relation_residual = 0.0;
  bool relation_ok = false;
  std::optional<std::array<bool, 4>> adjacency_check;  // constructive mode only
  bool feasible = false;
  std::string reason;  // first failing step, empty when feasible
};

// Runs moments -> virtual gauge -> range check -> third-moment relation, and
// in constructive mode also checks each position's neighbours against the
// neighbour-bend quadratic. Every step that can run is reported.
FeasibilityReport feasibility_check(const RadiusQuadruple& radii,
                                    FeasibilityMode mode = FeasibilityMode::Paper);

}  // namespace steiner
