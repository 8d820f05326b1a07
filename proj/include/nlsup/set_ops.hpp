#pragma once

#include <variant>
#include <vector>

#include "nlsup/box_union.hpp"
#include "nlsup/finite_set.hpp"
#include "nlsup/grid.hpp"
#include "nlsup/parallel.hpp"

namespace nlsup::setcore {

// Tagged union over the three set representations. Operations dispatch on
// the representation; conversions (rasterize) are explicit.
using SetHandle = std::variant<FinitePairSet, LatticeGrid, BoxUnion>;

int dim(const SetHandle& s);
bool set_empty(const SetHandle& s);
bool member(const SetHandle& s, const PairPoint& p);

// E^T = {(beta, alpha) : (alpha, beta) in E}. For grids the axis blocks are
// swapped, so the result is exact for any geometry.
FinitePairSet transpose(const FinitePairSet& e);
LatticeGrid transpose(const LatticeGrid& e);
BoxUnion transpose(const BoxUnion& e);
SetHandle transpose(const SetHandle& e);

// E^sym = E intersect E^T. Grid lookups of (beta, alpha) use cell-centre
// rounding; they are exact index swaps for square geometries.
FinitePairSet symmetrize(const FinitePairSet& e);
LatticeGrid symmetrize(const LatticeGrid& e);
BoxUnion symmetrize(const BoxUnion& e);
SetHandle symmetrize(const SetHandle& e);

// E^diag = {(alpha, beta) in E : (alpha, alpha) in E and (beta, beta) in E}.
FinitePairSet diagonalize(const FinitePairSet& e);
LatticeGrid diagonalize(const LatticeGrid& e);
BoxUnion diagonalize(const BoxUnion& e);
SetHandle diagonalize(const SetHandle& e);

// hat(E) = E^sym intersect E^diag: keeps (alpha, beta) iff (beta, alpha),
// (alpha, alpha) and (beta, beta) all belong to E. Idempotent.
FinitePairSet hat(const FinitePairSet& e);
LatticeGrid hat(const LatticeGrid& e, Exec exec = Exec::Parallel);
BoxUnion hat(const BoxUnion& e);
SetHandle hat(const SetHandle& e);

// Complement construction of the same set: E^sym minus every row and column
// through a diagonal gap. Kept as an independent cross-check of hat().
LatticeGrid hat_via_complement(const LatticeGrid& e);

// Component projections (which = 1 or 2) as a deduplicated, sorted point
// cloud. Finite and grid representations only.
std::vector<Point> projection(const SetHandle& s, int which);
// Section {alpha : (alpha, beta) in E}. Finite and grid representations only.
std::vector<Point> section(const SetHandle& s, const Point& beta);

// Pair cloud of a finite or grid set, flattened to points in R^{2m}.
std::vector<Point> point_cloud(const SetHandle& s);

// Sum-form Hausdorff distance between nonempty finite point clouds:
//   d(A, B) = sup_a dist(a, B) + sup_b dist(b, A).
double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b);
double hausdorff(const SetHandle& a, const SetHandle& b);

// Finite sets rasterize by the half-cell-diagonal rule: a cell is occupied
// iff some point of E is within half the cell diagonal of its centre.
LatticeGrid rasterize(const FinitePairSet& e, const GridGeometry& geom);
// Square unions rasterize by centre membership.
LatticeGrid rasterize(const BoxUnion& e, const GridGeometry& geom,
                      Exec exec = Exec::Parallel);
LatticeGrid rasterize(const SetHandle& e, const GridGeometry& geom);

}  // namespace nlsup::setcore
