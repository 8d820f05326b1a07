#include "nlsup/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nlsup::setcore {

int Axis::locate(double x) const {
  // Tiny slack keeps boundary values representable after float round-trips.
  const double slack = 1e-12 * std::max(1.0, std::abs(hi - lo));
  if (x < lo - slack || x > hi + slack) return -1;
  int i = static_cast<int>(std::floor((x - lo) / h()));
  return std::clamp(i, 0, n - 1);
}

void GridGeometry::validate() const {
  if (m < 1) throw DimensionError("grid dimension must be >= 1");
  if (static_cast<int>(axes.size()) != 2 * m) {
    throw DimensionError("grid must have 2m axes");
  }
  for (const Axis& a : axes) {
    if (!(a.lo < a.hi) || a.n < 1 || !std::isfinite(a.lo) ||
        !std::isfinite(a.hi)) {
      throw ParseError("grid axis must have lo < hi and n >= 1");
    }
  }
}

std::size_t GridGeometry::cell_count() const {
  std::size_t c = 1;
  for (const Axis& a : axes) c *= static_cast<std::size_t>(a.n);
  return c;
}

bool GridGeometry::square() const {
  for (int k = 0; k < m; ++k) {
    if (!(axes[k] == axes[m + k])) return false;
  }
  return true;
}

std::size_t GridGeometry::flat(const std::vector<int>& idx) const {
  std::size_t f = 0;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    f = f * static_cast<std::size_t>(axes[k].n) +
        static_cast<std::size_t>(idx[k]);
  }
  return f;
}

std::vector<int> GridGeometry::unflat(std::size_t f) const {
  std::vector<int> idx(axes.size());
  for (std::size_t k = axes.size(); k-- > 0;) {
    idx[k] = static_cast<int>(f % static_cast<std::size_t>(axes[k].n));
    f /= static_cast<std::size_t>(axes[k].n);
  }
  return idx;
}

PairPoint GridGeometry::cell_center(const std::vector<int>& idx) const {
  PairPoint p;
  p.first.resize(m);
  p.second.resize(m);
  for (int k = 0; k < m; ++k) {
    p.first[k] = axes[k].center(idx[k]);
    p.second[k] = axes[m + k].center(idx[m + k]);
  }
  return p;
}

PairPoint GridGeometry::cell_center(std::size_t f) const {
  return cell_center(unflat(f));
}

bool GridGeometry::locate(const PairPoint& p, std::vector<int>& idx) const {
  idx.assign(axes.size(), 0);
  for (int k = 0; k < m; ++k) {
    const int i = axes[k].locate(p.first[k]);
    if (i < 0) return false;
    idx[k] = i;
  }
  for (int k = 0; k < m; ++k) {
    const int i = axes[m + k].locate(p.second[k]);
    if (i < 0) return false;
    idx[m + k] = i;
  }
  return true;
}

double GridGeometry::half_cell_diag() const {
  double s = 0.0;
  for (const Axis& a : axes) s += a.h() * a.h();
  return 0.5 * std::sqrt(s);
}

GridGeometry square_geometry(int m, double lo, double hi, int n) {
  GridGeometry g;
  g.m = m;
  g.axes.assign(2 * static_cast<std::size_t>(m), Axis{lo, hi, n});
  g.validate();
  return g;
}

void LatticeGrid::validate() const {
  geom.validate();
  if (occ.size() != geom.cell_count()) {
    throw ParseError("grid occupancy size does not match geometry");
  }
}

std::size_t LatticeGrid::count() const {
  return static_cast<std::size_t>(
      std::count_if(occ.begin(), occ.end(), [](auto v) { return v != 0; }));
}

LatticeGrid empty_grid(const GridGeometry& geom) {
  geom.validate();
  return {geom, std::vector<std::uint8_t>(geom.cell_count(), 0)};
}

LatticeGrid grid_from_predicate(
    const GridGeometry& geom,
    const std::function<bool(const PairPoint&)>& pred) {
  LatticeGrid g = empty_grid(geom);
  const std::size_t n = geom.cell_count();
  for (std::size_t f = 0; f < n; ++f) {
    g.occ[f] = pred(geom.cell_center(f)) ? 1 : 0;
  }
  return g;
}

bool equal(const LatticeGrid& a, const LatticeGrid& b) {
  return a.geom == b.geom && a.occ == b.occ;
}

}  // namespace nlsup::setcore
