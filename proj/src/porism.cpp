#include "steiner/porism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

constexpr double kPi = std::numbers::pi;

// tan^2(pi/n), exact for the orders where it is rational.
double tan_squared(int n) {
  switch (n) {
    case 3: return 3.0;
    case 4: return 1.0;
    case 6: return 1.0 / 3.0;
    default: {
      const double t = std::tan(kPi / n);
      return t * t;
    }
  }
}

double pedoe_radicand(int n, double R, double r) {
  const double diff = (R - r) * (R - r);
  const double cross = 4.0 * tan_squared(n) * R * r;
  const double radicand = diff - cross;
  // Rounding in q can leave a tiny residue where the exact radicand is zero.
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * std::max(diff, cross);
  return std::abs(radicand) <= noise ? 0.0 : radicand;
}

double reduce_phase(double theta, int n) {
  const double period = 2.0 * kPi / n;
  double phase = std::fmod(theta, period);
  if (phase < 0.0) phase += period;
  if (phase >= period) phase = 0.0;
  return phase;
}

}  // namespace

double Gauge::q() const { return tan_squared(n); }

OrientedCircle Gauge::inner_parent() const {
  return OrientedCircle::chain(PlanePoint::Zero(), r);
}

OrientedCircle Gauge::outer_parent() const {
  return OrientedCircle::outer(PlanePoint(d, 0.0), R);
}

std::optional<double> pedoe_distance(int n, double R, double r) {
  if (n < 3) throw InvalidInput("pedoe_distance: chain length must be at least 3");
  if (!(r > 0.0) || !(R > r)) throw InvalidInput("pedoe_distance: need R > r > 0");
  const double radicand = pedoe_radicand(n, R, r);
  if (radicand < 0.0) return std::nullopt;
  return std::sqrt(radicand);
}

GaugeReport validate_gauge(const Gauge& g, Tolerance tol) {
  if (g.n < 3) throw InvalidInput("gauge: chain length must be at least 3");
  if (!std::isfinite(g.R) || !std::isfinite(g.r) || !std::isfinite(g.d))
    throw InvalidInput("gauge: non-finite value");
  if (!(g.r > 0.0) || !(g.R > 0.0)) throw InvalidInput("gauge: radii must be positive");
  if (!(g.R > g.r)) throw InvalidInput("gauge: outer radius must exceed inner radius");
  if (g.d < 0.0) throw InvalidInput("gauge: center distance must be non-negative");

  GaugeReport report;
  report.pedoe_residual = std::abs(g.d * g.d - pedoe_radicand(g.n, g.R, g.r));
  report.valid = report.pedoe_residual <= tol.relative * std::max(1.0, g.R * g.R);
  report.message = report.valid ? "ok" : "center distance violates the Pedoe relation";
  return report;
}

void require_valid(const Gauge& g, Tolerance tol) {
  const GaugeReport report = validate_gauge(g, tol);
  if (!report.valid) throw DomainError("gauge: " + report.message);
}

Gauge make_gauge(int n, double R, double r) {
  const auto d = pedoe_distance(n, R, r);
  if (!d) throw DomainError("gauge: no porism of this order for the given radii");
  return {n, R, r, *d};
}

PoristicRange poristic_range(const Gauge& g) {
  PoristicRange range;
  range.min_radius = (g.R - g.d - g.r) / 2.0;
  range.max_radius = (g.R + g.d - g.r) / 2.0;
  range.bend_of_max_radius = 2.0 / (g.R + g.d - g.r);
  range.bend_of_min_radius = 2.0 / (g.R - g.d - g.r);
  return range;
}

ConcentricModel concentric_model(const Gauge& g) {
  ConcentricModel model;
  if (g.d == 0.0) {
    model.rho_in = g.r;
    model.rho_out = g.R;
    model.identity = true;
    return model;
  }
  const auto points = limiting_points(g.inner_parent(), g.outer_parent());
  model.pole = points.interior;
  const OrientedCircle inner_image = invert_circle(model.pole, g.inner_parent());
  const OrientedCircle outer_image = invert_circle(model.pole, g.outer_parent());
  // The pole lies inside both parents, so the inner parent becomes the outer
  // boundary of the annulus.
  model.center = inner_image.center;
  model.rho_in = std::min(inner_image.radius, outer_image.radius);
  model.rho_out = std::max(inner_image.radius, outer_image.radius);
  return model;
}

Eigen::ArrayXd SteinerChain::radii() const {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(circles.size()));
  for (std::size_t i = 0; i < circles.size(); ++i) out(Eigen::Index(i)) = circles[i].radius;
  return out;
}

Eigen::ArrayXd SteinerChain::bends() const {
  Eigen::ArrayXd out(static_cast<Eigen::Index>(circles.size()));
  for (std::size_t i = 0; i < circles.size(); ++i) out(Eigen::Index(i)) = circles[i].bend();
  return out;
}

Eigen::ArrayXcd SteinerChain::centers() const {
  Eigen::ArrayXcd out(static_cast<Eigen::Index>(circles.size()));
  for (std::size_t i = 0; i < circles.size(); ++i)
    out(Eigen::Index(i)) = to_complex(circles[i].center);
  return out;
}

SteinerChain chain_at_phase(const Gauge& g, double theta) {
  require_valid(g);
  const ConcentricModel model = concentric_model(g);
  const double mid = (model.rho_in + model.rho_out) / 2.0;
  const double width = (model.rho_out - model.rho_in) / 2.0;

  SteinerChain chain;
  chain.gauge = g;
  chain.phase = reduce_phase(theta, g.n);
  chain.circles.reserve(static_cast<std::size_t>(g.n));
  for (int k = 0; k < g.n; ++k) {
    const double angle = chain.phase + 2.0 * kPi * k / g.n;
    const PlanePoint c = model.center + mid * PlanePoint(std::cos(angle), std::sin(angle));
    const OrientedCircle ring = OrientedCircle::chain(c, width);
    chain.circles.push_back(model.identity ? ring : invert_circle(model.pole, ring));
  }
  return chain;
}

double ChainResiduals::max() const { return std::max({adjacent, inner, outer, range}); }

ChainResiduals chain_residuals(const SteinerChain& chain) {
  const Gauge& g = chain.gauge;
  const OrientedCircle inner = g.inner_parent();
  const OrientedCircle outer = g.outer_parent();
  const PoristicRange range = poristic_range(g);

  ChainResiduals res;
  const std::size_t n = chain.circles.size();
  for (std::size_t i = 0; i < n; ++i) {
    const OrientedCircle& c = chain.circles[i];
    const OrientedCircle& next = chain.circles[(i + 1) % n];
    res.adjacent = std::max(res.adjacent, external_tangency_residual(c, next));
    res.inner = std::max(res.inner, external_tangency_residual(c, inner));
    res.outer = std::max(res.outer, internal_tangency_residual(outer, c));
    const double outside =
        std::max({0.0, range.min_radius - c.radius, c.radius - range.max_radius});
    res.range = std::max(res.range, outside);
  }
  return res;
}

bool satisfies_chain_invariants(const SteinerChain& chain, double residual_tolerance) {
  if (chain.circles.size() != static_cast<std::size_t>(chain.gauge.n)) return false;
  for (const auto& c : chain.circles)
    if (!(c.radius > 0.0) || c.orientation != Orientation::ChainOrInner) return false;
  return chain_residuals(chain).max() < residual_tolerance;
}

SteinerChain conjugate_chain(const SteinerChain& chain) {
  SteinerChain out = chain;
  for (auto& c : out.circles) c.center.y() = -c.center.y();
  return out;
}

YiuCoefficients yiu_coefficients(const Gauge& g, double u) {
  const PoristicRange range = poristic_range(g);
  const double margin = Tolerance{}.scaled(g.R);
  if (u < range.min_radius - margin || u > range.max_radius + margin)
    throw DomainError("yiu_coefficients: radius outside the poristic range");

  const double q = g.q();
  const double Rr = g.R * g.r;
  const double lead = (q + 1.0) * Rr;
  YiuCoefficients c;
  c.alpha = lead * lead * u * u;
  c.beta = 2.0 * lead * u * ((q - 1.0) * Rr - (g.R - g.r) * u);
  const double t = lead - (g.R - g.r) * u;
  c.gamma = t * t + 4.0 * Rr * u * u;
  return c;
}

NeighborBends neighbor_bends(const Gauge& g, double u) {
  const YiuCoefficients c = yiu_coefficients(g, u);
  double disc = c.discriminant();
  if (disc < 0.0) {
    if (disc < -1e-9 * c.beta * c.beta)
      throw DomainError("neighbor_bends: negative discriminant");
    disc = 0.0;
  }
  // beta < 0 on the poristic range; the stable form avoids cancellation.
  const double s = c.beta < 0.0 ? -c.beta + std::sqrt(disc) : -c.beta - std::sqrt(disc);
  double x1 = s / (2.0 * c.alpha);
  double x2 = s == 0.0 ? x1 : 2.0 * c.gamma / s;
  if (x1 > x2) std::swap(x1, x2);
  return {x1, x2};
}

double neighbor_bend_sum(const Gauge& g, double u) {
  const YiuCoefficients c = yiu_coefficients(g, u);
  return -c.beta / c.alpha;
}

double neighbor_radius_sum(const Gauge& g, double u) {
  const YiuCoefficients c = yiu_coefficients(g, u);
  return -c.beta / c.gamma;
}

YiuChain chain_by_yiu(const Gauge& g, double u0, BranchRule rule) {
  require_valid(g);
  YiuChain out;
  out.radii.push_back(u0);

  NeighborBends roots = neighbor_bends(g, u0);
  double prev_bend = 1.0 / u0;
  double next_bend = rule == BranchRule::LargerBendFirst ? roots.plus : roots.minus;

  for (int step = 1; step <= g.n; ++step) {
    const double u = 1.0 / next_bend;
    if (step == g.n) {
      out.closure_residual = std::abs(u - u0);
      break;
    }
    out.radii.push_back(u);

    roots = neighbor_bends(g, u);
    const double to_minus = std::abs(roots.minus - prev_bend);
    const double to_plus = std::abs(roots.plus - prev_bend);
    const double scale = std::max(std::abs(roots.minus), std::abs(roots.plus));
    if (std::min(to_minus, to_plus) > 1e-6 * scale)
      throw DomainError("chain_by_yiu: previous circle is not a neighbour of the current one");
    prev_bend = 1.0 / u;
    next_bend = to_minus > to_plus ? roots.minus : roots.plus;
  }
  return out;
}

}  // namespace steiner
