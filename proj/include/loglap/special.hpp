#ifndef LOGLAP_SPECIAL_HPP
#define LOGLAP_SPECIAL_HPP

#include <utility>
#include <vector>

#include "loglap/field.hpp"
#include "loglap/types.hpp"

namespace loglap::special {

inline constexpr double euler_gamma = 0.5772156649015328606065120900824024;

// Gamma function for x > 0, accurate to at least 12 significant digits.
double gamma_fn(double x);

// Digamma Psi = Gamma'/Gamma for x > 0, accurate to at least 12 significant digits.
double digamma(double x);

// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

// Constants attached to the zero-order operator in dimension N:
//   c_N   = pi^{-N/2} Gamma(N/2)            (kernel constant)
//   rho_N = 2 ln 2 + Psi(N/2) - gamma       (zero-order constant)
//   sigma_N = 2 pi^{N/2} / Gamma(N/2)       (unit sphere surface measure)
//   mp_volume_threshold = 2^N e^{(N/2)(Psi(N/2)-gamma)} |B_1|
struct DimensionConstants {
  int dim = 1;
  double c_N = 0;
  double rho_N = 0;
  double sigma_N = 0;
  double gamma = euler_gamma;
  double mp_volume_threshold = 0;
};

DimensionConstants constants_for(int n);

// Modulus ell(r) = 1 / |ln(min{r, clamp})|, extended by ell(0) = 0.
struct LogModulus {
  double clamp = 0.1;
  double operator()(double r) const;
};

// ell with the standard clamp 0.1.
double ell(double r);

// pow(ell(r), alpha)
double ell_pow(double r, double alpha);

// min over samples of ell(lambda r) / (ell(lambda) ell(r)).
double ell_semihomogeneity_constant(const std::vector<std::pair<double, double>>& samples);

// max over pairs of |u(x)-u(y)| / ell^alpha(|x-y|); a lower bound for the
// alpha-log-Holder seminorm of u.
double log_holder_seminorm(const ScalarField& u, double alpha,
                           const std::vector<std::pair<Point, Point>>& pairs);

}  // namespace loglap::special

#endif
