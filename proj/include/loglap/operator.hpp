#ifndef LOGLAP_OPERATOR_HPP
#define LOGLAP_OPERATOR_HPP

#include "loglap/field.hpp"
#include "loglap/geometry.hpp"
#include "loglap/grid.hpp"
#include "loglap/quadrature.hpp"
#include "loglap/types.hpp"

namespace loglap::op {

// Pointwise value of the zero-order operator split into its three terms:
//   total = near.value - far.value + zero_order
// near: c_N * difference integral over B_1(x); far: c_N * complement
// integral of u; zero_order: rho_N u(x).
struct LoglapValue {
  quad::IntegralResult near;
  quad::IntegralResult far;
  double zero_order = 0.0;
  double total = 0.0;
  double error_estimate() const { return near.error_estimate + far.error_estimate; }
};

LoglapValue eval_loglap(const ScalarField& u, const Point& x, const quad::QuadConfig& cfg);

// Geometry correction
//   h_Omega(x) = c_N ( int_{B_1(x) \ Omega} |x-y|^{-N} dy
//               - int_{Omega \ B_1(x)} |x-y|^{-N} dy ).
// Points within 1e-12 of the boundary are rejected (the first integral
// diverges there).
quad::IntegralResult h_omega(const geom::Domain& dom, const Point& x, const quad::QuadConfig& cfg);

// Killing measure kappa_Omega(x) = c_N int_{B_1(x) \ Omega} |x-y|^{-N} dy >= 0.
quad::IntegralResult kappa_omega(const geom::Domain& dom, const Point& x,
                                 const quad::QuadConfig& cfg);

// Domain-restricted representation, valid for u vanishing outside dom:
//   c_N int_Omega (u(x)-u(y)) |x-y|^{-N} dy + (h_Omega(x) + rho_N) u(x)
quad::IntegralResult eval_loglap_domain(const ScalarField& u, const geom::Domain& dom,
                                        const Point& x, const quad::QuadConfig& cfg);

// Bilinear forms on discrete functions.
//   E(u,v)   = (c_N/2) iint_{|x-y|<=1} (u(x)-u(y))(v(x)-v(y)) |x-y|^{-N}
//   E_L(u,v) = E(u,v) - c_N iint_{|x-y|>=1} u(x) v(y) |x-y|^{-N} + rho_N int u v
double bilinear_E(const GridFunction& u, const GridFunction& v, const quad::QuadConfig& cfg);
double bilinear_EL(const GridFunction& u, const GridFunction& v, const quad::QuadConfig& cfg);

struct ResidualReport {
  double residual = 0.0;      // signed defect of the identity
  double error_budget = 0.0;  // summed quadrature error estimates
};

// Product-rule defect
//   L[uv](x) - u(x) Lv(x) - v(x) Lu(x) + I(u,v)(x),
// which vanishes up to quadrature error.
ResidualReport leibniz_residual(const ScalarField& u, const ScalarField& v, const Point& x,
                                const quad::QuadConfig& cfg);

// The bilinear term I(u,v)(x) of the product rule.
quad::IntegralResult leibniz_I(const ScalarField& u, const ScalarField& v, const Point& x,
                               const quad::QuadConfig& cfg);

// Dilation defect L[u(./lambda)](x) - L u(x/lambda) - ln(lambda^{-2}) u(x/lambda).
ResidualReport scaling_residual(const ScalarField& u, double lambda, const Point& x,
                                const quad::QuadConfig& cfg);

}  // namespace loglap::op

#endif
