#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Core>

#include "steiner/errors.hpp"
#include "steiner/tolerance.hpp"

namespace steiner {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using PlanePoint = Point2<double>;

// Chain circles and the inner parent carry bend +1/radius; the outer parent,
// which contains the chain, carries -1/radius.
enum class Orientation { ChainOrInner, OuterParent };

template <typename Scalar>
struct Circle {
  Point2<Scalar> center = Point2<Scalar>::Zero();
  Scalar radius = Scalar(1);
  Orientation orientation = Orientation::ChainOrInner;

  static Circle chain(const Point2<Scalar>& c, Scalar rho) {
    return {c, rho, Orientation::ChainOrInner};
  }
  static Circle outer(const Point2<Scalar>& c, Scalar rho) {
    return {c, rho, Orientation::OuterParent};
  }

  Scalar bend() const {
    return orientation == Orientation::OuterParent ? Scalar(-1) / radius
                                                   : Scalar(1) / radius;
  }
};

using OrientedCircle = Circle<double>;

template <typename Scalar>
std::complex<Scalar> to_complex(const Point2<Scalar>& p) {
  return {p.x(), p.y()};
}

template <typename Scalar>
Point2<Scalar> from_complex(const std::complex<Scalar>& z) {
  return {z.real(), z.imag()};
}

template <typename Scalar>
Scalar external_tangency_residual(const Circle<Scalar>& c1, const Circle<Scalar>& c2) {
  using std::abs;
  return abs((c1.center - c2.center).norm() - (c1.radius + c2.radius));
}

template <typename Scalar>
Scalar internal_tangency_residual(const Circle<Scalar>& outer, const Circle<Scalar>& inner) {
  using std::abs;
  return abs((outer.center - inner.center).norm() - (outer.radius - inner.radius));
}

// Unit-radius inversion centred at `pole`.
template <typename Scalar>
Point2<Scalar> invert_point(const Point2<Scalar>& pole, const Point2<Scalar>& z) {
  const Point2<Scalar> v = z - pole;
  const Scalar s2 = v.squaredNorm();
  if (s2 == Scalar(0)) throw DomainError("invert_point: point coincides with the pole");
  return pole + v / s2;
}

// Image of a circle under unit-radius inversion at `pole`. Circles passing
// through the pole (whose images are lines) are rejected.
template <typename Scalar>
Circle<Scalar> invert_circle(const Point2<Scalar>& pole, const Circle<Scalar>& c,
                             Tolerance tol = {}) {
  using std::abs;
  const Point2<Scalar> v = c.center - pole;
  const Scalar s = v.norm();
  if (abs(s - c.radius) < Scalar(tol.scaled(double(c.radius))))
    throw DomainError("invert_circle: circle passes through the pole");
  const Scalar power = v.squaredNorm() - c.radius * c.radius;
  return {pole + v / power, c.radius / abs(power), c.orientation};
}

template <typename Scalar>
struct LimitingPoints {
  Point2<Scalar> interior;  // inside the inner circle
  Point2<Scalar> exterior;  // outside the outer circle
  bool degenerate = false;  // concentric input, both points are the common center
};

// Limiting points of the coaxal pencil spanned by two nested circles whose
// centers lie on the x-axis.
template <typename Scalar>
LimitingPoints<Scalar> limiting_points(const Circle<Scalar>& inner, const Circle<Scalar>& outer) {
  using std::abs;
  using std::sqrt;
  const Scalar c0 = inner.center.x();
  const Scalar offset = outer.center.x() - c0;
  if (offset == Scalar(0)) return {inner.center, inner.center, true};

  // Relative to the inner center the limiting points solve
  // x^2 - 2*x_rad*x + r^2 = 0, so their product is r^2.
  const Scalar r = inner.radius;
  const Scalar x_rad = (offset * offset + r * r - outer.radius * outer.radius) / (Scalar(2) * offset);
  const Scalar power = x_rad * x_rad - r * r;
  if (power < Scalar(0)) throw DomainError("limiting_points: circles are not nested");
  const Scalar root = sqrt(power);
  const Scalar far = x_rad < Scalar(0) ? x_rad - root : x_rad + root;
  const Scalar near = r * r / far;
  return {Point2<Scalar>(c0 + near, Scalar(0)), Point2<Scalar>(c0 + far, Scalar(0)), false};
}

}  // namespace steiner
