#include "loglap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace loglap::quad {

namespace {

constexpr double kPi = std::numbers::pi;

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

// One adaptive panel pass: G15 against its own bisection, recurse on demand.
// Traversal is depth-first, left child first, so the summation order is fixed.
struct PanelIntegrator {
  const std::function<double(double)>* f;
  double tol_per_panel;
  int max_leaves;
  int leaves = 0;
  long evals = 0;
  bool exhausted = false;
  KahanSum value;
  KahanSum err;

  double gauss15(double a, double b) {
    const auto& xs = gl_nodes(15);
    const auto& ws = gl_weights(15);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    KahanSum s;
    for (int i = 0; i < 15; ++i) s.add(ws[i] * (*f)(mid + half * xs[i]));
    evals += 15;
    return half * s.value();
  }

  void run(double a, double b, double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double left = gauss15(a, m);
    const double right = gauss15(m, b);
    const double diff = std::fabs(whole - (left + right));
    if (diff <= tol_per_panel || depth >= 28 || leaves + 2 > max_leaves) {
      if (diff > tol_per_panel && leaves + 2 > max_leaves) exhausted = true;
      ++leaves;
      value.add(left + right);
      err.add(diff);
      return;
    }
    run(a, m, left, depth + 1);
    run(m, b, right, depth + 1);
  }

  void integrate(double a, double b) {
    if (!(b > a)) return;
    const double whole = gauss15(a, b);
    run(a, b, whole, 0);
  }
};

std::map<int, std::pair<std::vector<double>, std::vector<double>>> g_gl_cache;
std::mutex g_gl_mutex;

void compute_gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

const std::pair<std::vector<double>, std::vector<double>>& gl_rule(int n) {
  std::lock_guard<std::mutex> lock(g_gl_mutex);
  auto it = g_gl_cache.find(n);
  if (it == g_gl_cache.end()) {
    std::pair<std::vector<double>, std::vector<double>> rule;
    compute_gauss_legendre(n, rule.first, rule.second);
    it = g_gl_cache.emplace(n, std::move(rule)).first;
  }
  return it->second;
}

const std::vector<double>& gl_nodes(int n) { return gl_rule(n).first; }
const std::vector<double>& gl_weights(int n) { return gl_rule(n).second; }

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  const auto& rule = gl_rule(n);
  nodes = rule.first;
  weights = rule.second;
}

QuadConfig default_config(int dim) {
  QuadConfig cfg;
  cfg.abs_tol = dim == 1 ? 1e-8 : 1e-6;
  return cfg;
}

TailHint TailHint::from_class(DiniClass c, double alpha) {
  TailHint t;
  switch (c) {
    case DiniClass::Smooth:
      t.kind = Linear;
      break;
    case DiniClass::LogHolder:
      t.kind = LogHolder;
      t.alpha = alpha;
      break;
    case DiniClass::Indicator:
      t.kind = Bounded;
      break;
  }
  return t;
}

IntegralResult integrate_graded(const std::function<double(double)>& profile,
                                const QuadConfig& cfg, TailHint tail) {
  if (!(cfg.grade_base > 0.0 && cfg.grade_base < 1.0))
    throw std::invalid_argument("integrate_graded: grade_base must lie in (0,1)");
  if (!(cfg.min_radius > 0.0 && cfg.min_radius <= 1e-3))
    throw std::invalid_argument("integrate_graded: min_radius must lie in (0, 1e-3]");

  // panel boundaries base^k down to min_radius
  std::vector<double> edges;
  edges.push_back(1.0);
  double e = cfg.grade_base;
  while (e > cfg.min_radius) {
    edges.push_back(e);
    e *= cfg.grade_base;
  }
  edges.push_back(cfg.min_radius);
  const int npanels = static_cast<int>(edges.size()) - 1;

  auto f = [&profile](double t) { return profile(t) / t; };

  PanelIntegrator pi;
  pi.f = &f;
  pi.tol_per_panel = cfg.abs_tol / std::max(1, npanels);
  pi.max_leaves = std::max(8, cfg.max_panels);

  // outermost panel first; order is fixed regardless of scheduling
  for (int k = 0; k < npanels; ++k) pi.integrate(edges[k + 1], edges[k]);

  IntegralResult res;
  res.value = pi.value.value();
  res.error_estimate = pi.err.value();
  res.evaluations = pi.evals;

  // unintegrated tail below min_radius, bounded from the declared decay class
  if (tail.kind != TailHint::None) {
    const double p0 = std::fabs(profile(cfg.min_radius));
    const double p1 = std::fabs(profile(2.0 * cfg.min_radius));
    const double m = std::max(p0, p1);
    res.evaluations += 2;
    double bound = 0.0;
    switch (tail.kind) {
      case TailHint::Linear:
        bound = m;  // |p(t)| <= m t / min_radius gives integral <= m
        break;
      case TailHint::LogHolder:
        if (tail.alpha > 1.0) {
          const double L = -std::log(cfg.min_radius);
          bound = m * L / (tail.alpha - 1.0);  // m/ell^a(r0) * int ell^a/t
        } else {
          bound = m * std::fabs(std::log(cfg.min_radius));
        }
        break;
      case TailHint::Bounded:
        bound = m * std::fabs(std::log(cfg.min_radius));
        break;
      default:
        break;
    }
    res.error_estimate += bound;
  }

  res.converged = !pi.exhausted &&
                  res.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(res.value));
  return res;
}

IntegralResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                  const QuadConfig& cfg) {
  IntegralResult res;
  if (!(b > a)) return res;
  PanelIntegrator pi;
  pi.f = &f;
  pi.tol_per_panel = cfg.abs_tol / 4.0;
  pi.max_leaves = std::max(8, cfg.max_panels);
  pi.integrate(a, b);
  res.value = pi.value.value();
  res.error_estimate = pi.err.value();
  res.evaluations = pi.evals;
  res.converged = !pi.exhausted &&
                  res.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(res.value));
  return res;
}

double sphere_average_fn(const std::function<double(const Point&)>& f, const Point& x, double r,
                         const QuadConfig& cfg) {
  const int n = static_cast<int>(x.size());
  if (n == 1) {
    return 0.5 * (f(point1(x[0] - r)) + f(point1(x[0] + r)));
  }
  if (n == 2) {
    const int m = std::max(4, cfg.angular_order);
    KahanSum s;
    Point p(2);
    for (int k = 0; k < m; ++k) {
      const double th = 2.0 * kPi * (k + 0.5) / m;
      p[0] = x[0] + r * std::cos(th);
      p[1] = x[1] + r * std::sin(th);
      s.add(f(p));
    }
    return s.value() / m;
  }
  if (n == 3) {
    const int q = std::clamp(cfg.angular_order / 4, 6, 32);
    const auto& zs = gl_nodes(q);
    const auto& ws = gl_weights(q);
    KahanSum s;
    Point p(3);
    for (int i = 0; i < q; ++i) {
      const double z = zs[i];
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      KahanSum ring;
      for (int j = 0; j < 2 * q; ++j) {
        const double th = 2.0 * kPi * (j + 0.5) / (2 * q);
        p[0] = x[0] + r * rho * std::cos(th);
        p[1] = x[1] + r * rho * std::sin(th);
        p[2] = x[2] + r * z;
        ring.add(f(p));
      }
      s.add(ws[i] * ring.value() / (2 * q));
    }
    return 0.5 * s.value();  // Gauss weights on [-1,1] sum to 2
  }
  throw std::invalid_argument("sphere_average: dimension must be 1, 2 or 3");
}

double sphere_average(const ScalarField& f, const Point& x, double r, const QuadConfig& cfg) {
  return sphere_average_fn([&f](const Point& p) { return f(p); }, x, r, cfg);
}

IntegralResult integrate_region(const ScalarField& integrand, const geom::Domain& region,
                                const std::optional<ExcludedBall>& exclude, const QuadConfig& cfg) {
  const int n = region.dim;
  if (n == 1) {
    // decompose into intervals, remove the excluded one, adapt per piece
    std::vector<std::pair<double, double>> pieces;
    if (region.kind == geom::DomainKind::Interval) {
      pieces.push_back({region.a, region.b});
    } else if (region.kind == geom::DomainKind::Ball) {
      pieces.push_back({region.center[0] - region.radius, region.center[0] + region.radius});
    } else if (region.kind == geom::DomainKind::Indicator) {
      // scan for membership transitions, refine by bisection
      const int res = 2048;
      const double lo = region.bbox_lo[0], hi = region.bbox_hi[0];
      const double h = (hi - lo) / res;
      auto edge = [&](double out, double in) {
        for (int it = 0; it < 60; ++it) {
          const double m = 0.5 * (out + in);
          (geom::contains(region, point1(m)) ? in : out) = m;
        }
        return 0.5 * (out + in);
      };
      bool prev = false;
      double start = lo;
      for (int i = 0; i < res; ++i) {
        const bool cur = geom::contains(region, point1(lo + (i + 0.5) * h));
        if (cur && !prev) start = (i == 0) ? lo : edge(lo + (i - 0.5) * h, lo + (i + 0.5) * h);
        if (!cur && prev) pieces.push_back({start, edge(lo + (i + 0.5) * h, lo + (i - 0.5) * h)});
        prev = cur;
      }
      if (prev) pieces.push_back({start, hi});
    } else {
      throw std::invalid_argument("integrate_region: unsupported 1D region kind");
    }
    if (exclude) {
      std::vector<std::pair<double, double>> cut;
      const double ea = exclude->center[0] - exclude->radius;
      const double eb = exclude->center[0] + exclude->radius;
      for (auto [a, b] : pieces) {
        if (eb <= a || ea >= b) {
          cut.push_back({a, b});
          continue;
        }
        if (ea > a) cut.push_back({a, ea});
        if (eb < b) cut.push_back({eb, b});
      }
      pieces = std::move(cut);
    }
    IntegralResult total;
    for (auto [a, b] : pieces) {
      auto f1 = [&integrand](double t) { return integrand(point1(t)); };
      total += integrate_interval(f1, a, b, cfg);
    }
    return total;
  }

  // polar decomposition around the excluded ball or the region anchor
  Point anchor;
  double r0 = 0.0;
  if (exclude) {
    anchor = exclude->center;
    r0 = exclude->radius;
  } else {
    switch (region.kind) {
      case geom::DomainKind::Ball:
      case geom::DomainKind::HalfBall:
      case geom::DomainKind::CapD:
        anchor = region.center;
        break;
      case geom::DomainKind::Indicator:
        anchor = 0.5 * (region.bbox_lo + region.bbox_hi);
        break;
      default:
        throw std::invalid_argument("integrate_region: unsupported region kind");
    }
  }
  const double rmax = geom::bounding_radius_from(region, anchor);
  if (rmax <= r0) return {};
  const double consts_sigma = (n == 2) ? 2.0 * kPi : 4.0 * kPi;

  auto clipped = [&](const Point& p) {
    return geom::contains(region, p) ? integrand(p) : 0.0;
  };
  auto shell = [&](double r) {
    return consts_sigma * std::pow(r, n - 1) * sphere_average_fn(clipped, anchor, r, cfg);
  };
  IntegralResult res = integrate_interval(shell, r0, rmax, cfg);
  if (cfg.angular_refine_check) {
    QuadConfig coarse = cfg;
    coarse.angular_order = std::max(8, cfg.angular_order / 2);
    coarse.angular_refine_check = false;
    auto shell_c = [&](double r) {
      return consts_sigma * std::pow(r, n - 1) * sphere_average_fn(clipped, anchor, r, coarse);
    };
    IntegralResult again = integrate_interval(shell_c, r0, rmax, coarse);
    res.error_estimate += std::fabs(res.value - again.value);
    res.evaluations += again.evaluations;
    res.converged = res.converged &&
                    res.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(res.value));
  }
  return res;
}

}  // namespace loglap::quad
