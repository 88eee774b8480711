#include "loglap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace loglap {

namespace {

// Mirrored dyadic nodes on [a, b]: distances H 2^{-k}, k = 0..m-1, from each
// endpoint, H = (b-a)/2.  Total node count 2m + 1 including endpoints.
std::vector<double> graded_nodes(double a, double b, int n) {
  if (n < 5 || n % 2 == 0)
    throw std::invalid_argument("Grid: boundary-graded node count must be odd and >= 5");
  const int m = (n - 1) / 2;
  const double H = 0.5 * (b - a);
  std::vector<double> xs;
  xs.reserve(n);
  xs.push_back(a);
  for (int k = m - 1; k >= 1; --k) xs.push_back(a + H * std::pow(2.0, -k));
  xs.push_back(a + H);
  for (int k = 1; k <= m - 1; ++k) xs.push_back(b - H * std::pow(2.0, -(m - k)));
  xs.push_back(b);
  return xs;
}

}  // namespace

Grid Grid::make(const geom::Domain& domain, int n, Grading grading) {
  if (domain.kind != geom::DomainKind::Interval && domain.kind != geom::DomainKind::Ball)
    throw std::invalid_argument("Grid: only interval and ball domains are discretized");
  if (n < 3) throw std::invalid_argument("Grid: need at least 3 nodes");
  double lo, hi;
  if (domain.kind == geom::DomainKind::Interval) {
    lo = domain.a;
    hi = domain.b;
  } else {
    lo = 0.0;
    hi = domain.radius;
  }
  Grid g;
  g.domain = domain;
  g.grading = grading;
  if (grading == Grading::Uniform) {
    g.nodes = Eigen::VectorXd::LinSpaced(n, lo, hi);
  } else {
    const auto xs = graded_nodes(lo, hi, n);
    g.nodes = Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<long>(xs.size()));
  }
  for (int i = 0; i + 1 < g.n(); ++i)
    if (!(g.nodes[i] < g.nodes[i + 1])) throw std::invalid_argument("Grid: nodes must increase");
  return g;
}

double GridFunction::node_value(int i) const {
  const int f = grid.first_dof();
  if (i < f || i >= f + grid.num_dofs()) return 0.0;
  return coeffs[i - f];
}

double GridFunction::eval_coord(double t) const {
  const auto& xs = grid.nodes;
  const int n = grid.n();
  if (grid.radial()) t = std::fabs(t);
  if (grid.radial() && t <= xs[0]) return node_value(0);
  if (t <= xs[0] || t >= xs[n - 1]) return 0.0;
  // binary search for the element containing t
  int lo = 0, hi = n - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (xs[mid] <= t ? lo : hi) = mid;
  }
  const double w = (t - xs[lo]) / (xs[lo + 1] - xs[lo]);
  return (1.0 - w) * node_value(lo) + w * node_value(lo + 1);
}

double GridFunction::operator()(const Point& x) const {
  if (grid.radial()) return eval_coord((x - grid.domain.center).norm());
  return eval_coord(x[0]);
}

ScalarField GridFunction::as_field() const {
  ScalarField f;
  GridFunction copy = *this;
  f.eval = [copy](const Point& x) { return copy(x); };
  f.dim = grid.dim();
  if (grid.radial())
    f.support_radius = grid.domain.center.norm() + grid.domain.radius;
  else
    f.support_radius = std::max(std::fabs(grid.domain.a), std::fabs(grid.domain.b));
  f.dini_class = DiniClass::LogHolder;
  f.log_holder_alpha = 1.0;
  f.label = "grid_function";
  return f;
}

}  // namespace loglap
