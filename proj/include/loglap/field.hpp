#ifndef LOGLAP_FIELD_HPP
#define LOGLAP_FIELD_HPP

#include <functional>
#include <string>
#include <utility>

#include "loglap/types.hpp"

namespace loglap {

// Regularity hint used by quadrature tail bounds.
enum class DiniClass { Smooth, LogHolder, Indicator };

// Evaluable real field on R^N with a declared bounded support.
// eval must return 0 for |x| > support_radius.
struct ScalarField {
  std::function<double(const Point&)> eval;
  int dim = 1;
  double support_radius = 0.0;
  DiniClass dini_class = DiniClass::Smooth;
  double log_holder_alpha = 0.0;  // exponent when dini_class == LogHolder
  std::string label;

  double operator()(const Point& x) const { return eval(x); }
};

ScalarField zero_field(int dim);

// exp(-|x|^2 / (2 width^2)), clipped to zero outside B_support.
ScalarField gaussian_field(int dim, double width = 1.0, double support = 10.0);

// Smooth bump exp(1 - 1/(1 - |x-c|^2/r^2)) on B_r(c), zero outside.
ScalarField bump_field(int dim, const Point& center, double radius);

// Field composed with x -> x / lambda (the dilation u_lambda).
ScalarField dilated_field(const ScalarField& u, double lambda);

// Field composed with an affine map x -> (x - shift) / scale.
ScalarField affine_pullback(const ScalarField& u, const Point& shift, double scale);

// Pointwise product; support radius is the smaller of the two.
ScalarField product_field(const ScalarField& u, const ScalarField& v);

}  // namespace loglap

#endif
