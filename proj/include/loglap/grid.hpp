#ifndef LOGLAP_GRID_HPP
#define LOGLAP_GRID_HPP

#include <Eigen/Dense>

#include "loglap/field.hpp"
#include "loglap/geometry.hpp"
#include "loglap/types.hpp"

namespace loglap {

enum class Grading { Uniform, BoundaryGraded };

// 1D interval grid, or radial grid on a ball.  Nodes are strictly increasing
// coordinates (1D) or radii; the outermost node sits on the boundary.
// BoundaryGraded places nodes at distance H 2^{-k} from each end of the
// coordinate range, which resolves log-scale boundary layers.
struct Grid {
  geom::Domain domain;
  Eigen::VectorXd nodes;
  Grading grading = Grading::Uniform;

  bool radial() const { return domain.kind == geom::DomainKind::Ball; }
  int dim() const { return domain.dim; }
  int n() const { return static_cast<int>(nodes.size()); }

  // Index range of Dirichlet unknowns: [first_dof, first_dof + num_dofs).
  // 1D excludes both end nodes; radial grids keep the center as an unknown.
  int first_dof() const { return radial() ? 0 : 1; }
  int num_dofs() const { return n() - (radial() ? 1 : 2); }

  static Grid make(const geom::Domain& domain, int n, Grading grading);
};

// Discrete function: piecewise linear between nodes, zero on and outside the
// boundary; radial grids interpolate in the radius.
struct GridFunction {
  Grid grid;
  Eigen::VectorXd coeffs;  // one per dof

  double node_value(int node_index) const;
  double eval_coord(double t) const;  // coordinate in 1D, radius if radial
  double operator()(const Point& x) const;
  ScalarField as_field() const;
};

}  // namespace loglap

#endif
