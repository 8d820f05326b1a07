#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "test_helpers.hpp"

using namespace nlsup;
using namespace nlsup::setcore;
using nlsup::cartesian::hat_via_cliques;
using nlsup::cartesian::inclusion_feasible;
using nlsup::cartesian::maximal_cartesian;

TEST_CASE("corner wells form one maximal base") {
  auto fam = maximal_cartesian(SetHandle(th::corner_wells()));
  REQUIRE(fam.bases.size() == 1);
  REQUIRE(fam.bases[0].size() == 2);
  CHECK(fam.bases[0][0][0] == doctest::Approx(-1.0));
  CHECK(fam.bases[0][1][0] == doctest::Approx(1.0));
  CHECK(inclusion_feasible(SetHandle(th::corner_wells())));
}

TEST_CASE("axis wells have no bases at all") {
  auto fam = maximal_cartesian(SetHandle(th::axis_wells()));
  CHECK(fam.bases.empty());
  CHECK_FALSE(inclusion_feasible(SetHandle(th::axis_wells())));
  auto h = hat_via_cliques(SetHandle(th::axis_wells()));
  CHECK(set_empty(h));
}

TEST_CASE("disjoint cliques and singletons are reported") {
  auto e = make_finite(
      1, {pp(0, 0), pp(1, 1), pp(0, 1), pp(1, 0), pp(3, 3)});
  auto fam = maximal_cartesian(SetHandle(e));
  REQUIRE(fam.bases.size() == 2);
  CHECK(fam.bases[0].size() == 2);   // {0, 1}
  CHECK(fam.bases[1].size() == 1);   // {3}
  CHECK(fam.bases[1][0][0] == doctest::Approx(3.0));
}

TEST_CASE("overlapping cliques stay separate without the cross pairs") {
  FinitePairSet e;
  e.m = 1;
  for (double a : {0.0, 1.0})
    for (double b : {0.0, 1.0}) e.add(pp(a, b));
  for (double a : {1.0, 2.0})
    for (double b : {1.0, 2.0}) e.add(pp(a, b));
  e.normalize();
  auto fam = maximal_cartesian(SetHandle(e));
  REQUIRE(fam.bases.size() == 2);
  CHECK(fam.bases[0].size() == 2);
  CHECK(fam.bases[1].size() == 2);
  CHECK(fam.bases[0][0][0] == doctest::Approx(0.0));
  CHECK(fam.bases[1][1][0] == doctest::Approx(2.0));
}

TEST_CASE("asymmetric pairs contribute nothing") {
  auto e = make_finite(1, {pp(0, 0), pp(5, 5), pp(0, 5)});
  auto fam = maximal_cartesian(SetHandle(e));
  REQUIRE(fam.bases.size() == 2);  // two singletons: (0,5) has no mirror
  auto h = std::get<FinitePairSet>(hat_via_cliques(SetHandle(e)));
  CHECK(equal(h, make_finite(1, {pp(0, 0), pp(5, 5)})));
}

TEST_CASE("cliques match the exhaustive oracle on random sets") {
  std::mt19937 rng(31337u);
  for (int t = 0; t < 60; ++t) {
    const int m = t % 3 == 2 ? 2 : 1;
    auto e = th::random_pairs(rng, m, m == 1 ? 10 : 5);
    auto fam = maximal_cartesian(SetHandle(e));
    auto orc = th::oracle_cartesian(e);
    CHECK(th::bases_equal(fam.bases, orc, e.tol));
    auto viac = std::get<FinitePairSet>(hat_via_cliques(SetHandle(e)));
    CHECK(equal(viac, hat(e)));
  }
}

TEST_CASE("grid cliques agree with grid hat") {
  auto geom = square_geometry(1, -3, 3, 41);
  for (auto pred : {th::in_rect, th::in_disk, th::in_diamond}) {
    auto g = grid_from_predicate(geom, pred);
    auto viac = std::get<LatticeGrid>(hat_via_cliques(SetHandle(g)));
    CHECK(equal(viac, hat(g)));
  }
  // A grid base is an interval of diagonal cells here.
  auto sq = grid_from_predicate(geom, th::in_square);
  auto fam = maximal_cartesian(SetHandle(sq));
  REQUIRE(fam.bases.size() == 1);
  for (const auto& v : fam.bases[0]) CHECK(std::abs(v[0]) <= 1.0);
}

TEST_CASE("determinism: repeated enumeration is identical") {
  std::mt19937 rng(99u);
  auto e = th::random_pairs(rng, 1, 9);
  auto f1 = maximal_cartesian(SetHandle(e));
  auto f2 = maximal_cartesian(SetHandle(e));
  REQUIRE(f1.bases.size() == f2.bases.size());
  for (std::size_t i = 0; i < f1.bases.size(); ++i) {
    REQUIRE(f1.bases[i].size() == f2.bases[i].size());
    for (std::size_t k = 0; k < f1.bases[i].size(); ++k)
      CHECK(f1.bases[i][k] == f2.bases[i][k]);
  }
}

TEST_CASE("vertex cap rejects oversized grid inputs") {
  // 65^2 = 4225 diagonal cells exceed the 4096-vertex clique cap.
  auto geom = square_geometry(2, -1, 1, 65);
  LatticeGrid g;
  g.geom = geom;
  g.occ.assign(geom.cell_count(), 1);
  CHECK_THROWS_AS(maximal_cartesian(SetHandle(g)), PreconditionError);
}
