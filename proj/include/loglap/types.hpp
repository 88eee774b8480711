#ifndef LOGLAP_TYPES_HPP
#define LOGLAP_TYPES_HPP

#include <Eigen/Dense>

namespace loglap {

// Point in R^N, N <= 3.  Fixed max size keeps evaluation loops allocation-free.
using Point = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;

inline Point point1(double x) {
  Point p(1);
  p << x;
  return p;
}

inline Point point2(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

inline Point point3(double x, double y, double z) {
  Point p(3);
  p << x, y, z;
  return p;
}

inline Point axis_point(int dim, double t) {
  Point p = Point::Zero(dim);
  p[0] = t;
  return p;
}

}  // namespace loglap

#endif
