#pragma once

#include <vector>

#include "nlsup/point.hpp"

namespace nlsup::functional {

struct Piece {
  double a = 0.0;
  double b = 1.0;
  setcore::Point value;
};

// Piecewise-constant function on the unit interval: pieces of positive
// length, pairwise disjoint up to endpoints, whose closures cover [0,1].
struct SimpleFunction {
  int n = 1;  // domain dimension (interval domain)
  int m = 1;  // value dimension
  std::vector<Piece> pieces;

  void validate(double tol = kDefaultTol) const;
  void normalize();  // sort by left endpoint, merge equal adjacent values
  const setcore::Point& value_at(double x) const;
  std::vector<setcore::Point> value_set(double tol = kDefaultTol) const;
};

SimpleFunction constant_function(const setcore::Point& v);
SimpleFunction make_simple(int m, std::vector<Piece> pieces);

}  // namespace nlsup::functional
