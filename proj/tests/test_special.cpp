#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loglap/special.hpp"

using namespace loglap;
using namespace loglap::special;

namespace {
constexpr double kGamma = euler_gamma;
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("gamma function reference values") {
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
  // Gamma(2.5) = 1.5 * 0.5 * sqrt(pi)
  CHECK(gamma_fn(2.5) == doctest::Approx(0.75 * std::sqrt(kPi)).epsilon(1e-12));
  CHECK(gamma_fn(2.5) == doctest::Approx(1.3293403881791370).epsilon(1e-12));
  // independent route: std::tgamma
  for (double x : {0.1, 0.3, 0.7, 1.3, 2.0, 3.7, 5.5, 9.25, 17.0})
    CHECK(gamma_fn(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
  CHECK_THROWS(gamma_fn(0.0));
  CHECK_THROWS(gamma_fn(-1.0));
}

TEST_CASE("digamma reference values and recurrence") {
  CHECK(digamma(1.0) == doctest::Approx(-kGamma).epsilon(1e-13));
  CHECK(digamma(0.5) == doctest::Approx(-kGamma - 2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - kGamma).epsilon(1e-13));
  for (double x = 0.5; x <= 10.0; x += 0.5)
    CHECK(digamma(x + 1.0) - digamma(x) == doctest::Approx(1.0 / x).epsilon(1e-10));
  CHECK_THROWS(digamma(0.0));
  CHECK_THROWS(digamma(-2.5));
}

TEST_CASE("dimension constants") {
  const auto c1 = constants_for(1);
  CHECK(c1.c_N == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(c1.rho_N == doctest::Approx(-2.0 * kGamma).epsilon(1e-12));
  CHECK(c1.sigma_N == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(c1.mp_volume_threshold == doctest::Approx(2.0 * std::exp(-kGamma)).epsilon(1e-12));
  // admissible interval radius in 1D
  const double r1 = 2.0 * std::exp(0.5 * (digamma(0.5) - kGamma));
  CHECK(r1 == doctest::Approx(0.561459).epsilon(2e-6));
  CHECK(r1 == doctest::Approx(std::exp(-kGamma)).epsilon(1e-13));

  const auto c2 = constants_for(2);
  CHECK(c2.c_N == doctest::Approx(1.0 / kPi).epsilon(1e-13));
  CHECK(c2.rho_N == doctest::Approx(2.0 * std::log(2.0) - 2.0 * kGamma).epsilon(1e-12));
  CHECK(c2.sigma_N == doctest::Approx(2.0 * kPi).epsilon(1e-13));

  CHECK_THROWS(constants_for(0));

  // c_N sigma_N = 2 in every dimension
  for (int n = 1; n <= 10; ++n) {
    const auto c = constants_for(n);
    CHECK(c.c_N > 0.0);
    CHECK(c.c_N * c.sigma_N == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c.sigma_N == doctest::Approx(n * unit_ball_volume(n)).epsilon(1e-12));
  }
  // rho_N strictly increasing
  for (int n = 1; n < 10; ++n)
    CHECK(constants_for(n + 1).rho_N > constants_for(n).rho_N);
}

TEST_CASE("modulus ell") {
  CHECK(ell(std::exp(-4.0)) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(ell(0.5) == doctest::Approx(1.0 / std::log(10.0)).epsilon(1e-13));
  CHECK(ell(0.1) == doctest::Approx(1.0 / std::log(10.0)).epsilon(1e-13));
  CHECK(ell(5.0) == doctest::Approx(ell(0.1)).epsilon(1e-13));
  CHECK(ell(0.0) == 0.0);
  CHECK_THROWS(ell(-1.0));
  // nondecreasing
  double prev = 0.0;
  for (double r = 1e-9; r < 1.0; r *= 3.0) {
    CHECK(ell(r) >= prev);
    prev = ell(r);
  }
}

TEST_CASE("ell semi-homogeneity") {
  // single sample with closed form: ell(0.01)/ell(0.1)^2 = ln(10)/2
  const double v = ell_semihomogeneity_constant({{0.1, 0.1}});
  CHECK(v == doctest::Approx(0.5 * std::log(10.0)).epsilon(1e-12));
  // clamped samples: all three factors hit the clamp
  const double w = ell_semihomogeneity_constant({{1.0, 0.5}});
  CHECK(w == doctest::Approx(std::log(10.0)).epsilon(1e-12));
  // exhaustive grid stays bounded away from zero
  std::vector<std::pair<double, double>> grid;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      grid.push_back({std::pow(10.0, -i), std::pow(10.0, -j)});
  const double c = ell_semihomogeneity_constant(grid);
  CHECK(c > 0.0);
  // lower bound holds across the grid with the reported constant
  for (auto [lam, r] : grid)
    CHECK(ell(lam * r) >= c * ell(lam) * ell(r) - 1e-14);
  CHECK_THROWS(ell_semihomogeneity_constant({}));
  CHECK_THROWS(ell_semihomogeneity_constant({{0.0, 1.0}}));
}

TEST_CASE("log-Holder seminorm") {
  ScalarField constf;
  constf.eval = [](const Point&) { return 3.0; };
  constf.dim = 1;
  constf.support_radius = 1e9;
  std::vector<std::pair<Point, Point>> pairs;
  for (double x = 0.01; x < 0.1; x += 0.017) pairs.push_back({point1(x), point1(x + 0.03)});
  CHECK(log_holder_seminorm(constf, 0.5, pairs) == 0.0);

  // u(x) = ell^{1/2}(x) against the origin: each ratio is exactly 1
  ScalarField halff;
  halff.eval = [](const Point& p) { return ell_pow(std::fabs(p[0]), 0.5); };
  halff.dim = 1;
  halff.support_radius = 1e9;
  std::vector<std::pair<Point, Point>> zero_pairs;
  for (double x : {0.003, 0.01, 0.04, 0.09}) zero_pairs.push_back({point1(x), point1(0.0)});
  CHECK(log_holder_seminorm(halff, 0.5, zero_pairs) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS(log_holder_seminorm(constf, 0.5, {{point1(1.0), point1(1.0)}}));
  CHECK_THROWS(log_holder_seminorm(constf, -1.0, pairs));
}
