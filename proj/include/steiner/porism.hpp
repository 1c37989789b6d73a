#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "steiner/geometry.hpp"
#include "steiner/tolerance.hpp"

namespace steiner {

// Parent-circle datum of a porism of order n. Canonical frame: the inner
// parent is centred at the origin, the outer parent at (+d, 0).
struct Gauge {
  int n = 3;
  double R = 0.0;
  double r = 0.0;
  double d = 0.0;

  double q() const;  // tan^2(pi/n)

  OrientedCircle inner_parent() const;
  OrientedCircle outer_parent() const;
};

struct GaugeReport {
  bool valid = false;
  double pedoe_residual = 0.0;  // |d^2 - ((R-r)^2 - 4qRr)|
  std::string message;
};

// d = sqrt((R-r)^2 - 4 tan^2(pi/n) R r), or nullopt when the radicand is negative.
std::optional<double> pedoe_distance(int n, double R, double r);

// Throws InvalidInput for n < 3, non-positive radii, R <= r or d < 0.
GaugeReport validate_gauge(const Gauge& g, Tolerance tol = {});

// Throws InvalidInput or DomainError unless the gauge is valid.
void require_valid(const Gauge& g, Tolerance tol = {});

// Gauge with d derived from the Pedoe relation; throws DomainError if infeasible.
Gauge make_gauge(int n, double R, double r);

// Extreme radii of poristic circles and the reciprocal bends. Named by the
// radius extreme they belong to: bend_of_min_radius is the largest bend.
struct PoristicRange {
  double min_radius = 0.0;
  double max_radius = 0.0;
  double bend_of_max_radius = 0.0;
  double bend_of_min_radius = 0.0;
};

PoristicRange poristic_range(const Gauge& g);

// Inversion at `pole` maps the parents onto circles of radii rho_in < rho_out
// about `center`. For d = 0 the model is the identity.
struct ConcentricModel {
  PlanePoint pole = PlanePoint::Zero();
  PlanePoint center = PlanePoint::Zero();
  double rho_in = 0.0;
  double rho_out = 0.0;
  bool identity = false;
};

ConcentricModel concentric_model(const Gauge& g);

struct SteinerChain {
  Gauge gauge;
  double phase = 0.0;  // in [0, 2*pi/n), measured in the concentric model
  std::vector<OrientedCircle> circles;

  Eigen::ArrayXd radii() const;
  Eigen::ArrayXd bends() const;
  Eigen::ArrayXcd centers() const;
};

// Chain whose first ring circle in the concentric model sits at angle theta.
// Circles are listed counterclockwise in the concentric model.
SteinerChain chain_at_phase(const Gauge& g, double theta);

// Largest tangency residuals of a chain against its own gauge.
struct ChainResiduals {
  double adjacent = 0.0;
  double inner = 0.0;
  double outer = 0.0;
  double range = 0.0;  // distance of the worst radius outside [r_*, r^*]

  double max() const;
};

ChainResiduals chain_residuals(const SteinerChain& chain);

bool satisfies_chain_invariants(const SteinerChain& chain, double residual_tolerance);

// (x, y) -> (x, -y) for every center.
SteinerChain conjugate_chain(const SteinerChain& chain);

struct YiuCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  double discriminant() const { return beta * beta - 4.0 * alpha * gamma; }
};

// Coefficients of the quadratic whose roots are the bends of the two
// neighbours of a chain circle of radius u. Throws DomainError when u is
// outside the poristic range.
YiuCoefficients yiu_coefficients(const Gauge& g, double u);

struct NeighborBends {
  double minus = 0.0;
  double plus = 0.0;
};

NeighborBends neighbor_bends(const Gauge& g, double u);

double neighbor_bend_sum(const Gauge& g, double u);
double neighbor_radius_sum(const Gauge& g, double u);

// Which root to step into from the seed circle.
enum class BranchRule { LargerBendFirst, SmallerBendFirst };

struct YiuChain {
  std::vector<double> radii;  // u_0 .. u_{n-1}
  double closure_residual = 0.0;  // |u_n - u_0|
};

// Walks around the chain with the neighbour quadratic, always stepping into
// the root that is not the circle just left behind.
YiuChain chain_by_yiu(const Gauge& g, double u0, BranchRule rule = BranchRule::LargerBendFirst);

}  // namespace steiner
