#pragma once

#include <vector>

#include "nlsup/point.hpp"

namespace nlsup::setcore {

struct P2 {
  double x = 0.0;
  double y = 0.0;
};

// Monotone-chain convex hull, counter-clockwise, collinear points dropped.
// Degenerate inputs collapse to one point or the two segment endpoints.
std::vector<P2> hull2d(std::vector<P2> pts);

// Containment in the convex hull of `poly` (point, segment, or ccw polygon),
// with `tol` as absolute slack on distances.
bool in_hull2d(const std::vector<P2>& poly, P2 p, double tol);

// Parameter t minimizing |p - (t*a + (1-t)*b)|, clamped to [0,1].
double segment_parameter(const Point& p, const Point& a, const Point& b);
double dist_to_segment(const Point& p, const Point& a, const Point& b);
bool on_segment(const Point& p, const Point& a, const Point& b, double tol);

// Convex region in R^m (m = 1: interval, m = 2: polygon), given by
// generating points; the convex hull is implied.
struct ConvexSet {
  int m = 1;
  std::vector<Point> pts;

  bool empty() const { return pts.empty(); }
  bool contains(const Point& p, double tol) const;

  static ConvexSet interval(double lo, double hi);
  static ConvexSet box2(double lo1, double hi1, double lo2, double hi2);
  static ConvexSet from_points(int m, std::vector<Point> pts);
};

ConvexSet convex_intersection(const ConvexSet& a, const ConvexSet& b,
                              double tol);
ConvexSet convex_union_hull(const ConvexSet& a, const ConvexSet& b);

}  // namespace nlsup::setcore
