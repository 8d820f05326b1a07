#include "nlsup/box_union.hpp"

#include "nlsup/geometry.hpp"

namespace nlsup::setcore {

void BoxUnion::validate() const {
  if (m < 1) throw DimensionError("box union dimension must be >= 1");
  if (!(tol >= 0.0)) throw ParseError("box union tolerance must be >= 0");
  for (const PairPoint& g : generators) validate_pair(g, m);
}

bool BoxUnion::contains(const PairPoint& p) const {
  for (const PairPoint& g : generators) {
    if (on_segment(p.first, g.first, g.second, tol) &&
        on_segment(p.second, g.first, g.second, tol)) {
      return true;
    }
  }
  return false;
}

BoxUnion make_box_union(int m, std::vector<PairPoint> gens, double tol) {
  BoxUnion b{m, tol, std::move(gens)};
  b.validate();
  return b;
}

}  // namespace nlsup::setcore
