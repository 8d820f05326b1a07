#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "test_helpers.hpp"

using namespace nlsup;
using namespace nlsup::setcore;
using namespace nlsup::hulls;

TEST_CASE("grid hull of the corner wells fills the square") {
  // Centres of [-1.5,1.5]/3 are exactly -1, 0, 1.
  auto geom = square_geometry(1, -1.5, 1.5, 3);
  auto g = rasterize(th::corner_wells(), geom);
  CHECK(g.count() == 4);
  auto r = sc_hull_grid(g);
  CHECK(r.converged);
  CHECK(r.hull.count() == 9);
  CHECK(r.cells_added == 5);
  CHECK(r.iterations >= 1);
  // idempotent
  auto r2 = sc_hull_grid(r.hull);
  CHECK(r2.cells_added == 0);
}

TEST_CASE("grid hull of the axis wells is the cross; its hat is the centre") {
  auto geom = square_geometry(1, -1.5, 1.5, 3);
  auto g = rasterize(th::axis_wells(), geom);
  CHECK(g.count() == 4);
  auto r = sc_hull_grid(g);
  CHECK(r.converged);
  CHECK(r.hull.count() == 5);  // plus-shaped cross
  auto h = hat(r.hull);
  CHECK(h.count() == 1);
  std::vector<int> centre = {1, 1};
  CHECK(h.occupied(geom.flat(centre)));
}

TEST_CASE("grid hull agrees with the pointwise fill oracle") {
  std::mt19937 rng(101u);
  for (int t = 0; t < 25; ++t) {
    auto g = th::random_grid(rng, 1, -2, 2, 15, 0.18);
    auto r = sc_hull_grid(g);
    CHECK(r.converged);
    CHECK(equal(r.hull, th::oracle_hull_m1(g)));
    // the input is contained in the hull
    for (std::size_t f = 0; f < g.occ.size(); ++f)
      if (g.occupied(f)) CHECK(r.hull.occupied(f));
  }
}

TEST_CASE("exact box hull of the corner wells is the unit square") {
  auto bu = sc_hull_boxes(th::corner_wells());
  CHECK_FALSE(bu.empty());
  CHECK(bu.contains(pp(0, 0)));
  CHECK(bu.contains(pp(0.5, -0.9)));
  CHECK(bu.contains(pp(-1, 1)));
  CHECK_FALSE(bu.contains(pp(1.1, 0)));
  CHECK_FALSE(bu.contains(pp(0, -1.01)));
}

TEST_CASE("box hull requires a hat-fixed scalar input") {
  CHECK_THROWS_AS(sc_hull_boxes(th::axis_wells()), PreconditionError);
  auto e2 = make_finite(2, {pp2(0, 0, 0, 0)});
  CHECK_THROWS_AS(sc_hull_boxes(e2), PreconditionError);
  // The empty set is hat-fixed; its hull is empty.
  FinitePairSet none;
  none.m = 1;
  CHECK(sc_hull_boxes(none).empty());
}

TEST_CASE("dex pruning keeps only maximal generator squares") {
  auto e = th::corner_wells();  // normalized: (-1,-1),(-1,1),(1,-1),(1,1)
  auto d = dex_prune(e);
  REQUIRE(d.kept.size() == 2);
  CHECK(d.kept[0] == 1);
  CHECK(d.kept[1] == 2);
  CHECK(d.generators.size() == 2);
  // The pruned union still covers the hull.
  auto full = sc_hull_boxes(e);
  BoxUnion pruned = make_box_union(1, d.generators.points);
  for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0})
    for (double z : {-1.0, -0.5, 0.2, 1.0})
      CHECK(pruned.contains(pp(x, z)) == full.contains(pp(x, z)));
}

TEST_CASE("box hull matches grid hull on random hat-fixed sets") {
  std::mt19937 rng(2026u);
  auto geom = square_geometry(1, -3, 3, 41);
  Axis ax = geom.axes[0];
  for (int t = 0; t < 10; ++t) {
    auto e = th::random_hat_fixed(rng, ax);
    auto a = rasterize(sc_hull_boxes(e), geom);
    auto b = sc_hull_grid(rasterize(e, geom)).hull;
    CHECK(equal(a, b));
  }
}

TEST_CASE("two-product hull membership") {
  auto a1 = ConvexSet::box2(0, 1, 0, 1);
  auto a2 = ConvexSet::box2(0.5, 1.5, 0.5, 1.5);
  auto t = two_cartesian_hull(a1, a2);
  // pure products
  CHECK(t.member(pp2(0, 0, 1, 1)));
  CHECK(t.member(pp2(0.6, 0.6, 1.5, 1.5)));
  // (A1 n A2) x conv(A1 u A2): (1.2, 0.4) is in the span hexagon only
  CHECK(t.member({Point{0.7, 0.7}, Point{1.2, 0.4}}));
  CHECK(t.member({Point{1.2, 0.4}, Point{0.7, 0.7}}));  // transpose
  // outside: first component in A1 only, second neither in A1 nor the span gate
  CHECK_FALSE(t.member({Point{0.2, 0.2}, Point{1.2, 0.4}}));
  // outside the span entirely
  CHECK_FALSE(t.member({Point{0.7, 0.7}, Point{0.1, 1.4}}));

  CHECK_THROWS_AS(two_cartesian_hull(a1, ConvexSet::box2(5, 6, 5, 6)),
                  PreconditionError);
}

TEST_CASE("two-product hull rasterization matches membership") {
  auto t = two_cartesian_hull(ConvexSet::box2(0, 1, 0, 1),
                              ConvexSet::box2(0.5, 1.5, 0.5, 1.5));
  GridGeometry g4;
  g4.m = 2;
  g4.axes.assign(4, Axis{-0.25, 1.75, 7});
  g4.validate();
  auto grid = t.rasterize(g4);
  for (std::size_t f = 0; f < grid.occ.size(); ++f)
    CHECK(grid.occupied(f) == t.member(g4.cell_center(f)));
}

TEST_CASE("structure check certifies golden cases") {
  auto geom = square_geometry(1, -1.5, 1.5, 3);
  auto corner = rasterize(th::corner_wells(), geom);
  auto rep = structure_check(corner);
  CHECK(rep.ok);
  CHECK(rep.cell_mismatches.empty());
  CHECK(rep.uncovered_bases.empty());
  CHECK(rep.cells_checked > 0);

  // Empty hat: trivially consistent.
  auto axis = rasterize(th::axis_wells(), geom);
  CHECK(structure_check(axis).ok);

  // Two overlapping generator squares.
  auto geom2 = square_geometry(1, -3, 3, 25);
  auto bu = make_box_union(1, {pp(-2, 0.5), pp(-0.5, 2)});
  CHECK(structure_check(rasterize(bu, geom2)).ok);
}

TEST_CASE("nested chains: intersection of hulls is the hull of the intersection") {
  auto probe = square_geometry(1, -3, 3, 41);
  std::mt19937 rng(5150u);
  for (int t = 0; t < 5; ++t) {
    auto e1 = th::random_hat_fixed(rng, probe.axes[0]);
    // remove one symmetric off-diagonal pair, if any, to get a strict subset
    auto e2 = e1;
    for (const auto& q : e1.points) {
      if (!approx_eq(q.first, q.second, e1.tol)) {
        FinitePairSet n;
        n.m = 1;
        for (const auto& r : e2.points)
          if (!(approx_eq(r, q, e2.tol) ||
                approx_eq(r, PairPoint{q.second, q.first}, e2.tol)))
            n.add(r);
        n.normalize();
        e2 = n;
        break;
      }
    }
    auto res = nested_intersection_check({e1, e2}, probe);
    CHECK(res.equal);
    CHECK(res.mismatches == 0);
    CHECK(res.probes == probe.cell_count());
  }
  CHECK_THROWS_AS(nested_intersection_check({}, probe), PreconditionError);
}

TEST_CASE("hull result bookkeeping") {
  auto geom = square_geometry(1, -1, 1, 10);
  auto g = empty_grid(geom);
  auto r = sc_hull_grid(g);
  CHECK(r.converged);
  CHECK(r.cells_added == 0);
  CHECK(r.hull.empty());

  std::mt19937 rng(77u);
  auto g2 = th::random_grid(rng, 1, -1, 1, 12, 0.2);
  auto r2 = sc_hull_grid(g2);
  CHECK(r2.cells_added == r2.hull.count() - g2.count());
}
