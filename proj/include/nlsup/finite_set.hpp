#pragma once

#include <vector>

#include "nlsup/point.hpp"

namespace nlsup::setcore {

// Finite set of ordered pairs in R^m x R^m. Points closer than `tol` in the
// max-norm are considered equal and merged.
struct FinitePairSet {
  int m = 1;
  double tol = kDefaultTol;
  std::vector<PairPoint> points;

  void validate() const;
  bool contains(const PairPoint& p) const;
  void add(PairPoint p);   // insert with dedup
  void normalize();        // dedup + canonical lexicographic order
  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

FinitePairSet make_finite(int m, std::vector<PairPoint> pts,
                          double tol = kDefaultTol);

// Mutual containment under the sets' tolerances.
bool equal(const FinitePairSet& a, const FinitePairSet& b);

}  // namespace nlsup::setcore
