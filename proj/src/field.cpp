#include "loglap/field.hpp"

#include <cmath>

namespace loglap {

ScalarField zero_field(int dim) {
  ScalarField f;
  f.eval = [](const Point&) { return 0.0; };
  f.dim = dim;
  f.support_radius = 0.0;
  f.label = "zero";
  return f;
}

ScalarField gaussian_field(int dim, double width, double support) {
  ScalarField f;
  const double w2 = width * width;
  f.eval = [w2, support](const Point& x) {
    const double r2 = x.squaredNorm();
    if (r2 > support * support) return 0.0;
    return std::exp(-0.5 * r2 / w2);
  };
  f.dim = dim;
  f.support_radius = support;
  f.label = "gaussian";
  return f;
}

ScalarField bump_field(int dim, const Point& center, double radius) {
  ScalarField f;
  Point c = center;
  f.eval = [c, radius](const Point& x) {
    const double s = (x - c).squaredNorm() / (radius * radius);
    if (s >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s));
  };
  f.dim = dim;
  f.support_radius = center.norm() + radius;
  f.label = "bump";
  return f;
}

ScalarField dilated_field(const ScalarField& u, double lambda) {
  ScalarField f = u;
  auto base = u.eval;
  const double inv = 1.0 / lambda;
  f.eval = [base, inv](const Point& x) { return base(inv * x); };
  f.support_radius = u.support_radius * lambda;
  f.label = u.label + "_dilated";
  return f;
}

ScalarField affine_pullback(const ScalarField& u, const Point& shift, double scale) {
  ScalarField f = u;
  auto base = u.eval;
  Point s = shift;
  f.eval = [base, s, scale](const Point& x) { return base(s + scale * x); };
  f.support_radius = (u.support_radius + shift.norm()) / scale;
  f.label = u.label + "_affine";
  return f;
}

ScalarField product_field(const ScalarField& u, const ScalarField& v) {
  ScalarField f;
  auto ue = u.eval;
  auto ve = v.eval;
  f.eval = [ue, ve](const Point& x) { return ue(x) * ve(x); };
  f.dim = u.dim;
  f.support_radius = std::min(u.support_radius, v.support_radius);
  f.dini_class = (u.dini_class == DiniClass::Smooth && v.dini_class == DiniClass::Smooth)
                     ? DiniClass::Smooth
                     : DiniClass::LogHolder;
  f.log_holder_alpha = std::min(u.log_holder_alpha > 0 ? u.log_holder_alpha : 1.0,
                                v.log_holder_alpha > 0 ? v.log_holder_alpha : 1.0);
  f.label = u.label + "*" + v.label;
  return f;
}

}  // namespace loglap
