#ifndef LOGLAP_GEOMETRY_HPP
#define LOGLAP_GEOMETRY_HPP

#include <functional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "loglap/types.hpp"

namespace loglap::geom {

enum class DomainKind { Interval, Ball, HalfBall, CapD, Indicator };

// Bounded open region with membership, boundary distance and measure.
// Open-set convention: boundary points are not contained.
struct Domain {
  DomainKind kind = DomainKind::Interval;
  int dim = 1;

  // Interval(a, b)
  double a = 0.0, b = 1.0;

  // Ball(center, radius); HalfBall uses radius with center 0 and {x_axis > 0}.
  Point center;
  double radius = 1.0;
  int axis = 0;

  // IndicatorRegion: membership predicate plus a required bounding box.
  std::function<bool(const Point&)> predicate;
  Point bbox_lo, bbox_hi;

  static Domain interval(double a, double b);
  static Domain ball(const Point& center, double radius);
  static Domain half_ball(double radius, int dim, int axis = 0);
  // D = B_{1/2}(e_1/2) intersected with {x_1 > 1/2}.
  static Domain cap_d(int dim = 2);
  static Domain indicator(int dim, std::function<bool(const Point&)> predicate,
                          const Point& bbox_lo, const Point& bbox_hi);
};

bool contains(const Domain& dom, const Point& x);

// Euclidean distance from an interior point to the boundary.  Closed form for
// analytic kinds; bisection along a fixed ray fan for indicator regions
// (tolerance 1e-10 per ray, result is exact only for boundaries aligned with
// the fan).
double dist_boundary(const Domain& dom, const Point& x);

// Lebesgue measure.  Closed form for analytic kinds; midpoint-grid count for
// indicator regions (resolution 1024 per axis in 1D/2D, 128 in 3D; error is
// O(h * perimeter)).
double measure(const Domain& dom);

// measure(dom) < 2^N e^{(N/2)(Psi(N/2)-gamma)} |B_1|
bool satisfies_mp_volume(const Domain& dom);

// max |y - x| over y in the closure (radius of a ball around x covering dom).
double bounding_radius_from(const Domain& dom, const Point& x);

// Fraction of the sphere S_r(x) lying inside dom, in [0, 1].  Closed form for
// intervals and balls, arc intersection for half balls and caps in 2D,
// fixed-rule sampling otherwise (angular_order points).
double sphere_inside_fraction(const Domain& dom, const Point& x, double r, int angular_order);

// JSON round trip for the CLI ({"kind":"interval","a":..,"b":..} etc.).
// Indicator regions are not serializable.
nlohmann::json to_json(const Domain& dom);
Domain domain_from_json(const nlohmann::json& j);

}  // namespace loglap::geom

#endif
