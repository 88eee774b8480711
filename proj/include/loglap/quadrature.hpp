#ifndef LOGLAP_QUADRATURE_HPP
#define LOGLAP_QUADRATURE_HPP

#include <functional>
#include <optional>

#include "loglap/field.hpp"
#include "loglap/geometry.hpp"
#include "loglap/types.hpp"

namespace loglap::quad {

struct QuadConfig {
  double abs_tol = 1e-8;
  double rel_tol = 0.0;
  int max_panels = 4000;       // leaf panel budget per integral
  double grade_base = 0.5;     // geometric panel grading toward the singularity
  int angular_order = 64;      // sphere-rule order for N >= 2
  double min_radius = 1e-10;   // inner cutoff for graded panels
  bool angular_refine_check = true;  // rerun N>=2 radial integrals at half the
                                     // angular order and widen the error bar
};

// abs_tol 1e-8 in 1D, 1e-6 otherwise.
QuadConfig default_config(int dim);

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

inline IntegralResult& operator+=(IntegralResult& a, const IntegralResult& b) {
  a.value += b.value;
  a.error_estimate += b.error_estimate;
  a.evaluations += b.evaluations;
  a.converged = a.converged && b.converged;
  return a;
}

// Declared decay of the integrand below min_radius; drives the unintegrated
// tail bound added to error_estimate.
struct TailHint {
  enum Kind { None, Linear, LogHolder, Bounded } kind = None;
  double alpha = 0.0;  // exponent for LogHolder
  static TailHint none() { return {}; }
  static TailHint from_class(DiniClass c, double alpha);
};

// integral_0^1 profile(t)/t dt with geometric panels [base^{k+1}, base^k]
// down to min_radius, adaptive Gauss per panel, two-half Richardson error
// estimate, fixed summation order.
IntegralResult integrate_graded(const std::function<double(double)>& profile,
                                const QuadConfig& cfg, TailHint tail = TailHint::none());

// Adaptive Gauss on [a, b] for bounded integrands.
IntegralResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                  const QuadConfig& cfg);

// Mean of the field over the sphere S_r(x): endpoint pair in 1D, midpoint
// trapezoid with angular_order points on the circle in 2D, a fixed z-level by
// azimuth product rule in 3D.
double sphere_average(const ScalarField& f, const Point& x, double r, const QuadConfig& cfg);

// Same rule applied to an arbitrary callable on points of S_r(x).
double sphere_average_fn(const std::function<double(const Point&)>& f, const Point& x, double r,
                         const QuadConfig& cfg);

struct ExcludedBall {
  Point center;
  double radius = 0.0;
};

// integral of the field over region minus the excluded ball.  Uses a polar
// decomposition around the excluded ball (or the region anchor when absent),
// so integrands concentrated near the exclusion surface are resolved.
IntegralResult integrate_region(const ScalarField& integrand, const geom::Domain& region,
                                const std::optional<ExcludedBall>& exclude, const QuadConfig& cfg);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace loglap::quad

#endif
