#pragma once

#include <vector>

#include "nlsup/point.hpp"

namespace nlsup::setcore {

// Union of squares Q_{alpha,beta} = [alpha,beta] x [alpha,beta], where
// [alpha,beta] = {t*alpha + (1-t)*beta : t in [0,1]} is a segment in R^m.
// Every such union is symmetric and contains its diagonal, so transpose,
// symmetrize, diagonalize, and hat act as the identity on this type.
struct BoxUnion {
  int m = 1;
  double tol = kDefaultTol;
  std::vector<PairPoint> generators;

  void validate() const;
  bool contains(const PairPoint& p) const;
  bool empty() const { return generators.empty(); }
  std::size_t size() const { return generators.size(); }
};

BoxUnion make_box_union(int m, std::vector<PairPoint> gens,
                        double tol = kDefaultTol);

}  // namespace nlsup::setcore
