#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nlsup/point.hpp"

namespace nlsup::setcore {

// Uniform axis partition of [lo, hi] into n cells; cell i has centre
// lo + (i + 0.5) * h.
struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  int n = 1;

  double h() const { return (hi - lo) / n; }
  double center(int i) const { return lo + (i + 0.5) * h(); }
  // Index of the cell containing x, or -1 if x lies outside [lo, hi].
  int locate(double x) const;
  bool operator==(const Axis&) const = default;
};

// Geometry of a cell-centred grid over R^m x R^m: axes[0..m) describe the
// first pair component, axes[m..2m) the second. Flat indices are row-major
// with axis 0 slowest.
struct GridGeometry {
  int m = 1;
  std::vector<Axis> axes;

  void validate() const;
  std::size_t cell_count() const;
  // True when the first and second component axes coincide, so (beta, alpha)
  // and (alpha, alpha) lookups are exact index swaps.
  bool square() const;

  std::size_t flat(const std::vector<int>& idx) const;
  std::vector<int> unflat(std::size_t f) const;
  PairPoint cell_center(const std::vector<int>& idx) const;
  PairPoint cell_center(std::size_t f) const;
  // Multi-index of the cell containing p; false if p is outside the ranges.
  bool locate(const PairPoint& p, std::vector<int>& idx) const;
  // Half of the cell diagonal in R^{2m}.
  double half_cell_diag() const;
  bool operator==(const GridGeometry&) const = default;
};

GridGeometry square_geometry(int m, double lo, double hi, int n);

// Occupancy set on a grid geometry: a cell belongs to the set iff its entry
// is nonzero. All set semantics are cell-centre based.
struct LatticeGrid {
  GridGeometry geom;
  std::vector<std::uint8_t> occ;

  void validate() const;
  bool occupied(std::size_t f) const { return occ[f] != 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
};

LatticeGrid empty_grid(const GridGeometry& geom);
LatticeGrid grid_from_predicate(
    const GridGeometry& geom,
    const std::function<bool(const PairPoint&)>& pred);

// Same geometry and identical occupancy.
bool equal(const LatticeGrid& a, const LatticeGrid& b);

}  // namespace nlsup::setcore
