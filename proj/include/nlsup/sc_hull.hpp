#pragma once

#include <cstddef>
#include <vector>

#include "nlsup/geometry.hpp"
#include "nlsup/set_ops.hpp"

namespace nlsup::hulls {

using setcore::BoxUnion;
using setcore::FinitePairSet;
using setcore::GridGeometry;
using setcore::LatticeGrid;
using setcore::PairPoint;

struct HullResult {
  LatticeGrid hull;
  int iterations = 0;  // completed double sweeps
  bool converged = false;
  std::size_t cells_added = 0;
};

// Separately convex hull on a grid: alternating sweeps replace each
// first-component slice (second component fixed) and then each
// second-component slice by its discrete convex hull, until a double sweep
// adds no cell. For m = 1 a slice hull is an interval fill; for m = 2 it is
// the scan-converted planar hull of the occupied cell centres (conservative:
// only centres inside the hull polygon are added). Slices within a sweep are
// independent, so the parallel and serial policies agree bitwise.
HullResult sc_hull_grid(const LatticeGrid& g, Exec exec = Exec::Parallel);

// Exact hull for scalar hat-fixed finite sets: the union of squares
// Q_{alpha,beta} over all (alpha, beta) in E. Requires m == 1 and E = hat(E).
BoxUnion sc_hull_boxes(const FinitePairSet& e);

struct DexSet {
  FinitePairSet generators;
  std::vector<std::size_t> kept;  // indices into the input point list
};
// Drops generators whose square is properly contained in another generator's
// square; the retained squares still cover the hull.
DexSet dex_prune(const FinitePairSet& e);

// Hull of (A1 x A1) u (A2 x A2) for convex A1, A2 with nonempty
// intersection: adds (A1 n A2) x conv(A1 u A2) and its transpose.
struct TwoCartesianHull {
  setcore::ConvexSet a1, a2;
  setcore::ConvexSet both;  // A1 n A2
  setcore::ConvexSet span;  // conv(A1 u A2)
  double tol = kDefaultTol;

  bool member(const PairPoint& p) const;
  LatticeGrid rasterize(const GridGeometry& geom,
                        Exec exec = Exec::Parallel) const;
};
TwoCartesianHull two_cartesian_hull(const setcore::ConvexSet& a1,
                                    const setcore::ConvexSet& a2,
                                    double tol = kDefaultTol);

struct StructureReport {
  bool ok = true;
  // Flat cells where hat(hull(hat K)) and the sampled union of generator
  // squares differ beyond a one-cell boundary band.
  std::vector<std::size_t> cell_mismatches;
  // Maximal Cartesian bases of the hull not covered by the sampled union.
  std::vector<std::size_t> uncovered_bases;
  std::size_t cells_checked = 0;
};
// Verifies on a grid that hat(hull(hat K)) equals the union of squares
// Q_{alpha,beta} over the occupied cells of hat K (squares are filled
// exactly for m = 1 and sampled on a fixed 17x17 parameter grid for m = 2),
// and that every maximal Cartesian base of the hull is covered by that
// union.
StructureReport structure_check(const LatticeGrid& k,
                                Exec exec = Exec::Parallel);

struct NestedCheckResult {
  bool equal = false;
  std::size_t mismatches = 0;
  std::size_t probes = 0;
};
// For a nested chain K_1 >= K_2 >= ... of scalar hat-fixed finite sets,
// compares the intersection of the hulls with the hull of the intersection
// by membership on a probe geometry.
NestedCheckResult nested_intersection_check(
    const std::vector<FinitePairSet>& chain, const GridGeometry& probe);

}  // namespace nlsup::hulls
