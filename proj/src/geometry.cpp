#include "loglap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "loglap/special.hpp"

namespace loglap::geom {

namespace {

constexpr double kPi = std::numbers::pi;

Point cap_center(int dim) {
  Point c = Point::Zero(dim);
  c[0] = 0.5;
  return c;
}

// Arcs on the unit circle as [lo, hi] intervals in radians, hi - lo <= 2 pi.
struct Arc {
  double lo, hi;
};

void append_normalized(std::vector<Arc>& out, double lo, double hi) {
  // normalize lo into [0, 2pi), keep length
  const double len = hi - lo;
  if (len <= 0) return;
  if (len >= 2 * kPi) {
    out.push_back({0.0, 2 * kPi});
    return;
  }
  double l = std::fmod(lo, 2 * kPi);
  if (l < 0) l += 2 * kPi;
  double h = l + len;
  if (h <= 2 * kPi) {
    out.push_back({l, h});
  } else {
    out.push_back({l, 2 * kPi});
    out.push_back({0.0, h - 2 * kPi});
  }
}

double intersect_length(const std::vector<Arc>& as, const std::vector<Arc>& bs) {
  double total = 0.0;
  for (const auto& a : as)
    for (const auto& b : bs) {
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (hi > lo) total += hi - lo;
    }
  return total;
}

// Angles theta with x + r(cos, sin) strictly inside the ball B_R(c).
std::vector<Arc> ball_arcs_2d(const Point& x, double r, const Point& c, double R) {
  std::vector<Arc> arcs;
  const Point d = c - x;
  const double dist = d.norm();
  if (dist < 1e-300) {
    if (r < R) arcs.push_back({0.0, 2 * kPi});
    return arcs;
  }
  // |x + r theta - c|^2 = dist^2 + r^2 - 2 r dist cos(theta - phi) < R^2
  const double cosgap = (dist * dist + r * r - R * R) / (2.0 * r * dist);
  if (cosgap >= 1.0) return arcs;                      // entirely outside
  const double phi = std::atan2(d[1], d[0]);
  if (cosgap <= -1.0) {                                // entirely inside
    arcs.push_back({0.0, 2 * kPi});
    return arcs;
  }
  const double half = std::acos(cosgap);               // inside iff |theta-phi| < half
  append_normalized(arcs, phi - half, phi + half);
  return arcs;
}

// Angles with (x + r theta) . e_axis > level.
std::vector<Arc> halfspace_arcs_2d(const Point& x, double r, int axis, double level) {
  std::vector<Arc> arcs;
  const double c0 = (level - x[axis]) / r;
  if (c0 <= -1.0) {
    arcs.push_back({0.0, 2 * kPi});
    return arcs;
  }
  if (c0 >= 1.0) return arcs;
  const double half = std::acos(c0);  // component > level iff angle to axis < half
  const double phi = (axis == 0) ? 0.0 : 0.5 * kPi;
  append_normalized(arcs, phi - half, phi + half);
  return arcs;
}

double ball_cap_fraction(double dist, double r, double R, int dim) {
  // fraction of S_r(x) inside B_R(c) with |x-c| = dist
  if (dist < 1e-300) return r < R ? 1.0 : 0.0;
  const double cosgap = (dist * dist + r * r - R * R) / (2.0 * r * dist);
  if (cosgap >= 1.0) return 0.0;   // sphere outside, or enclosing the ball
  if (cosgap <= -1.0) return 1.0;  // sphere inside the ball
  if (dim == 2) return std::acos(cosgap) / kPi;
  // dim == 3: spherical cap area fraction
  return 0.5 * (1.0 - cosgap);
}

int indicator_grid_res(int dim) { return dim >= 3 ? 128 : 1024; }

}  // namespace

Domain Domain::interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("Domain::interval: need a < b");
  Domain d;
  d.kind = DomainKind::Interval;
  d.dim = 1;
  d.a = a;
  d.b = b;
  return d;
}

Domain Domain::ball(const Point& center, double radius) {
  if (!(radius > 0)) throw std::invalid_argument("Domain::ball: radius must be positive");
  Domain d;
  d.kind = DomainKind::Ball;
  d.dim = static_cast<int>(center.size());
  d.center = center;
  d.radius = radius;
  return d;
}

Domain Domain::half_ball(double radius, int dim, int axis) {
  if (!(radius > 0)) throw std::invalid_argument("Domain::half_ball: radius must be positive");
  if (dim < 2) throw std::invalid_argument("Domain::half_ball: dimension must be >= 2");
  Domain d;
  d.kind = DomainKind::HalfBall;
  d.dim = dim;
  d.center = Point::Zero(dim);
  d.radius = radius;
  d.axis = axis;
  return d;
}

Domain Domain::cap_d(int dim) {
  if (dim < 2) throw std::invalid_argument("Domain::cap_d: dimension must be >= 2");
  Domain d;
  d.kind = DomainKind::CapD;
  d.dim = dim;
  d.center = cap_center(dim);
  d.radius = 0.5;
  d.axis = 0;
  return d;
}

Domain Domain::indicator(int dim, std::function<bool(const Point&)> predicate,
                         const Point& bbox_lo, const Point& bbox_hi) {
  Domain d;
  d.kind = DomainKind::Indicator;
  d.dim = dim;
  d.predicate = std::move(predicate);
  d.bbox_lo = bbox_lo;
  d.bbox_hi = bbox_hi;
  for (int i = 0; i < dim; ++i)
    if (!(bbox_lo[i] < bbox_hi[i]))
      throw std::invalid_argument("Domain::indicator: degenerate bounding box");
  return d;
}

bool contains(const Domain& dom, const Point& x) {
  switch (dom.kind) {
    case DomainKind::Interval:
      return x[0] > dom.a && x[0] < dom.b;
    case DomainKind::Ball:
      return (x - dom.center).norm() < dom.radius;
    case DomainKind::HalfBall:
      return x.norm() < dom.radius && x[dom.axis] > 0.0;
    case DomainKind::CapD:
      return (x - dom.center).norm() < dom.radius && x[0] > 0.5;
    case DomainKind::Indicator:
      for (int i = 0; i < dom.dim; ++i)
        if (x[i] <= dom.bbox_lo[i] || x[i] >= dom.bbox_hi[i]) return false;
      return dom.predicate(x);
  }
  return false;
}

double dist_boundary(const Domain& dom, const Point& x) {
  if (!contains(dom, x)) throw std::domain_error("dist_boundary: point outside domain");
  switch (dom.kind) {
    case DomainKind::Interval:
      return std::min(x[0] - dom.a, dom.b - x[0]);
    case DomainKind::Ball:
      return dom.radius - (x - dom.center).norm();
    case DomainKind::HalfBall:
      return std::min(dom.radius - x.norm(), x[dom.axis]);
    case DomainKind::CapD:
      return std::min(dom.radius - (x - dom.center).norm(), x[0] - 0.5);
    case DomainKind::Indicator: {
      // bisection along a fan of rays; lower bound limited by fan resolution
      const int nrays = dom.dim == 1 ? 2 : (dom.dim == 2 ? 64 : 128);
      double best = std::numeric_limits<double>::infinity();
      const double diam = (dom.bbox_hi - dom.bbox_lo).norm();
      for (int k = 0; k < nrays; ++k) {
        Point dir = Point::Zero(dom.dim);
        if (dom.dim == 1) {
          dir[0] = k == 0 ? 1.0 : -1.0;
        } else if (dom.dim == 2) {
          const double th = 2 * kPi * k / nrays;
          dir[0] = std::cos(th);
          dir[1] = std::sin(th);
        } else {
          // Fibonacci sphere directions
          const double z = 1.0 - 2.0 * (k + 0.5) / nrays;
          const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
          const double th = kPi * (1 + std::sqrt(5.0)) * k;
          dir[0] = rho * std::cos(th);
          dir[1] = rho * std::sin(th);
          dir[2] = z;
        }
        double lo = 0.0, hi = diam;
        if (contains(dom, x + hi * dir)) continue;
        while (hi - lo > 1e-10) {
          const double mid = 0.5 * (lo + hi);
          (contains(dom, x + mid * dir) ? lo : hi) = mid;
        }
        best = std::min(best, hi);
      }
      return best;
    }
  }
  return 0.0;
}

double measure(const Domain& dom) {
  switch (dom.kind) {
    case DomainKind::Interval:
      return dom.b - dom.a;
    case DomainKind::Ball:
      return special::unit_ball_volume(dom.dim) * std::pow(dom.radius, dom.dim);
    case DomainKind::HalfBall:
      return 0.5 * special::unit_ball_volume(dom.dim) * std::pow(dom.radius, dom.dim);
    case DomainKind::CapD:
      // the cut plane passes through the ball center
      return 0.5 * special::unit_ball_volume(dom.dim) * std::pow(dom.radius, dom.dim);
    case DomainKind::Indicator: {
      const int res = indicator_grid_res(dom.dim);
      const Point ext = dom.bbox_hi - dom.bbox_lo;
      double cell = 1.0;
      for (int i = 0; i < dom.dim; ++i) cell *= ext[i] / res;
      long count = 0;
      Point p = Point::Zero(dom.dim);
      if (dom.dim == 1) {
        for (int i = 0; i < res; ++i) {
          p[0] = dom.bbox_lo[0] + (i + 0.5) * ext[0] / res;
          if (dom.predicate(p)) ++count;
        }
      } else if (dom.dim == 2) {
        for (int i = 0; i < res; ++i)
          for (int j = 0; j < res; ++j) {
            p[0] = dom.bbox_lo[0] + (i + 0.5) * ext[0] / res;
            p[1] = dom.bbox_lo[1] + (j + 0.5) * ext[1] / res;
            if (dom.predicate(p)) ++count;
          }
      } else {
        for (int i = 0; i < res; ++i)
          for (int j = 0; j < res; ++j)
            for (int k = 0; k < res; ++k) {
              p[0] = dom.bbox_lo[0] + (i + 0.5) * ext[0] / res;
              p[1] = dom.bbox_lo[1] + (j + 0.5) * ext[1] / res;
              p[2] = dom.bbox_lo[2] + (k + 0.5) * ext[2] / res;
              if (dom.predicate(p)) ++count;
            }
      }
      return cell * count;
    }
  }
  return 0.0;
}

bool satisfies_mp_volume(const Domain& dom) {
  return measure(dom) < special::constants_for(dom.dim).mp_volume_threshold;
}

double bounding_radius_from(const Domain& dom, const Point& x) {
  switch (dom.kind) {
    case DomainKind::Interval:
      return std::max(std::fabs(x[0] - dom.a), std::fabs(x[0] - dom.b));
    case DomainKind::Ball:
    case DomainKind::HalfBall:
    case DomainKind::CapD:
      return (x - dom.center).norm() + dom.radius;
    case DomainKind::Indicator: {
      double r2 = 0.0;
      // farthest bounding-box corner
      const int corners = 1 << dom.dim;
      for (int c = 0; c < corners; ++c) {
        Point p(dom.dim);
        for (int i = 0; i < dom.dim; ++i)
          p[i] = (c >> i) & 1 ? dom.bbox_hi[i] : dom.bbox_lo[i];
        r2 = std::max(r2, (p - x).squaredNorm());
      }
      return std::sqrt(r2);
    }
  }
  return 0.0;
}

double sphere_inside_fraction(const Domain& dom, const Point& x, double r, int angular_order) {
  const int n = dom.dim;
  if (n == 1) {
    double f = 0.0;
    if (contains(dom, point1(x[0] - r))) f += 0.5;
    if (contains(dom, point1(x[0] + r))) f += 0.5;
    return f;
  }
  if (dom.kind == DomainKind::Ball)
    return ball_cap_fraction((x - dom.center).norm(), r, dom.radius, n);
  if (n == 2 && (dom.kind == DomainKind::HalfBall || dom.kind == DomainKind::CapD)) {
    const double level = dom.kind == DomainKind::HalfBall ? 0.0 : 0.5;
    const auto ball_part = ball_arcs_2d(x, r, dom.center, dom.radius);
    const auto half_part = halfspace_arcs_2d(x, r, dom.axis, level);
    return intersect_length(ball_part, half_part) / (2 * kPi);
  }
  // sampled fraction; deterministic fixed rule
  long inside = 0;
  if (n == 2) {
    for (int k = 0; k < angular_order; ++k) {
      const double th = 2 * kPi * (k + 0.5) / angular_order;
      if (contains(dom, x + r * point2(std::cos(th), std::sin(th)))) ++inside;
    }
    return static_cast<double>(inside) / angular_order;
  }
  // n == 3: z-levels x azimuth grid, midpoint in both
  const int q = std::max(6, angular_order / 8);
  long total = 0;
  for (int i = 0; i < q; ++i) {
    const double z = -1.0 + 2.0 * (i + 0.5) / q;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < 2 * q; ++j) {
      const double th = 2 * kPi * (j + 0.5) / (2 * q);
      Point dir = point3(rho * std::cos(th), rho * std::sin(th), z);
      if (contains(dom, x + r * dir)) ++inside;
      ++total;
    }
  }
  return static_cast<double>(inside) / total;
}

nlohmann::json to_json(const Domain& dom) {
  nlohmann::json j;
  switch (dom.kind) {
    case DomainKind::Interval:
      j["kind"] = "interval";
      j["a"] = dom.a;
      j["b"] = dom.b;
      break;
    case DomainKind::Ball: {
      j["kind"] = "ball";
      std::vector<double> c(dom.center.data(), dom.center.data() + dom.center.size());
      j["center"] = c;
      j["radius"] = dom.radius;
      break;
    }
    case DomainKind::HalfBall:
      j["kind"] = "halfball";
      j["radius"] = dom.radius;
      j["dim"] = dom.dim;
      break;
    case DomainKind::CapD:
      j["kind"] = "cap_D";
      j["dim"] = dom.dim;
      break;
    case DomainKind::Indicator:
      throw std::invalid_argument("to_json: indicator regions are not serializable");
  }
  return j;
}

Domain domain_from_json(const nlohmann::json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("domain: missing \"kind\"");
  const std::string kind = j["kind"];
  if (kind == "interval") {
    if (!j.contains("a") || !j.contains("b"))
      throw std::invalid_argument("domain: interval needs \"a\" and \"b\"");
    return Domain::interval(j["a"].get<double>(), j["b"].get<double>());
  }
  if (kind == "ball") {
    if (!j.contains("center") || !j.contains("radius"))
      throw std::invalid_argument("domain: ball needs \"center\" and \"radius\"");
    const auto c = j["center"].get<std::vector<double>>();
    if (c.empty() || c.size() > 3) throw std::invalid_argument("domain: ball center dimension");
    Point p(static_cast<int>(c.size()));
    for (size_t i = 0; i < c.size(); ++i) p[static_cast<int>(i)] = c[i];
    return Domain::ball(p, j["radius"].get<double>());
  }
  if (kind == "halfball") {
    if (!j.contains("radius") || !j.contains("dim"))
      throw std::invalid_argument("domain: halfball needs \"radius\" and \"dim\"");
    return Domain::half_ball(j["radius"].get<double>(), j["dim"].get<int>());
  }
  if (kind == "cap_D") return Domain::cap_d(j.value("dim", 2));
  throw std::invalid_argument("domain: unknown kind \"" + kind + "\"");
}

}  // namespace loglap::geom
