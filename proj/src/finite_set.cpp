#include "nlsup/finite_set.hpp"

#include <algorithm>

namespace nlsup::setcore {

void FinitePairSet::validate() const {
  if (m < 1) throw DimensionError("finite set dimension must be >= 1");
  if (!(tol >= 0.0)) throw ParseError("finite set tolerance must be >= 0");
  for (const PairPoint& p : points) validate_pair(p, m);
}

bool FinitePairSet::contains(const PairPoint& p) const {
  for (const PairPoint& q : points) {
    if (approx_eq(p, q, tol)) return true;
  }
  return false;
}

void FinitePairSet::add(PairPoint p) {
  validate_pair(p, m);
  if (!contains(p)) points.push_back(std::move(p));
}

void FinitePairSet::normalize() {
  std::vector<PairPoint> unique;
  unique.reserve(points.size());
  for (PairPoint& p : points) {
    bool seen = false;
    for (const PairPoint& q : unique) {
      if (approx_eq(p, q, tol)) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(std::move(p));
  }
  points = std::move(unique);
  std::sort(points.begin(), points.end(),
            [](const PairPoint& a, const PairPoint& b) {
              return lex_less(a, b);
            });
}

FinitePairSet make_finite(int m, std::vector<PairPoint> pts, double tol) {
  FinitePairSet e{m, tol, {}};
  for (PairPoint& p : pts) e.add(std::move(p));
  e.normalize();
  e.validate();
  return e;
}

bool equal(const FinitePairSet& a, const FinitePairSet& b) {
  if (a.m != b.m) return false;
  for (const PairPoint& p : a.points) {
    if (!b.contains(p)) return false;
  }
  for (const PairPoint& p : b.points) {
    if (!a.contains(p)) return false;
  }
  return true;
}

}  // namespace nlsup::setcore
