// Acceptance gate: one self-contained check per shipped guarantee, each
// printed as a single PASS/FAIL line. Exits nonzero if any criterion fails.
//
//  1. hat of four golden regions equals [-1,1]^2 cell by cell (res 201);
//     the axis wells hat to nothing, the corner wells are hat-fixed; < 1 s.
//  2. grid hull of the rasterized axis wells re-hats to the single origin
//     cell; the exact box hull of their (empty) hat is empty.
//  3. envelope of the four-corner-well distance (res 301, 64 levels)
//     reproduces sqrt(2)*max(|.|_inf - 1, 0) within gap + 2h*sqrt(2); < 60 s.
//  4. envelope of the axis-well distance: minimum and value at the origin
//     equal 1/sqrt(2) within one level gap.
//  5. exact box hulls match grid hulls on 100 random hat-fixed sets
//     (res 101); 100 nested chains pass the intersection check.
//  6. clique enumeration matches exhaustive search on 200 random sets and
//     rebuilds the hat.
//  7. oscillation between -1 and 1 around 0: every midpoint-indicator
//     pairing error is at most 2/j and contracts by <= 0.75 per doubling of
//     j in {4,...,512}; no value pair ever leaves {-1,1}^2.
//  8. empirical two-atom weights sit within 1/j of (1/2, 1/2) for j >= 8.
//  9. the closed-form hull of two overlapping planar boxes matches the 4D
//     grid hull (res 21 per axis) within a one-cell band.
// 10. the level criterion fails for the corner-well distance at level 0,
//     holds on a sampled separately level convex closed form at 16 trusted
//     levels, and holds for both bundled m = 2 supremands at res 17.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "test_helpers.hpp"

using namespace nlsup;
using namespace nlsup::setcore;

namespace {

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void require(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  const double t0 = now_s();
  auto geom = square_geometry(1, -3, 3, 201);
  auto sq = grid_from_predicate(geom, th::in_square);
  struct Named {
    const char* name;
    bool (*pred)(const PairPoint&);
  };
  for (auto [name, pred] : {Named{"rect", th::in_rect},
                             Named{"disk", th::in_disk},
                             Named{"diamond", th::in_diamond},
                             Named{"square", th::in_square}}) {
    auto h = hat(grid_from_predicate(geom, pred));
    o.require(equal(h, sq),
              std::string("hat(") + name + ") != [-1,1]^2 cellwise");
  }
  o.require(hat(th::axis_wells()).empty(), "hat(axis wells) not empty");
  o.require(equal(hat(th::corner_wells()), th::corner_wells()),
            "hat(corner wells) != corner wells");
  const double dt = now_s() - t0;
  o.require(dt < 1.0, "runtime " + fmt(dt) + "s >= 1s");
  o.detail = "res 201, " + fmt(dt) + "s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto geom = square_geometry(1, -3, 3, 201);
  auto raster = rasterize(th::axis_wells(), geom);
  auto hull = hulls::sc_hull_grid(raster);
  o.require(hull.converged, "grid hull did not converge");
  auto h = hat(hull.hull);
  o.require(h.count() == 1,
            "hat(hull) has " + std::to_string(h.count()) + " cells, want 1");
  if (h.count() == 1) {
    std::size_t f = 0;
    while (!h.occupied(f)) ++f;
    auto c = geom.cell_center(f);
    const double half = geom.axes[0].h() / 2 + 1e-12;
    o.require(std::abs(c.first[0]) <= half && std::abs(c.second[0]) <= half,
              "surviving cell is at (" + fmt(c.first[0]) + ", " +
                  fmt(c.second[0]) + "), not the origin");
    o.detail = "cell centre (" + fmt(c.first[0]) + ", " + fmt(c.second[0]) +
               "), h = " + fmt(geom.axes[0].h());
  }
  auto hk = hat(th::axis_wells());
  auto bu = hulls::sc_hull_boxes(hk);
  o.require(bu.empty(), "box hull of the empty hat is not empty");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const double t0 = now_s();
  auto geom = square_geometry(1, -3, 3, 301);
  auto w = supremand::sample(geom, [](const PairPoint& p) {
    return supremand::closed_form("ex_a_W", p);
  });
  auto er = supremand::slc_envelope_auto(w, 64);
  const double gap = er.report.schedule.gap();
  const double h = geom.axes[0].h();
  const double tol = gap + 2.0 * h * std::sqrt(2.0);
  const double cap = er.report.schedule.levels.back() - gap;
  double max_err = 0.0;
  std::size_t uncovered = 0, compared = 0;
  for (std::size_t f = 0; f < er.env.values.size(); ++f) {
    const double truth =
        supremand::closed_form("ex_a_slc", geom.cell_center(f));
    if (truth > cap) continue;
    ++compared;
    if (!std::isfinite(er.env.values[f])) {
      ++uncovered;
      continue;
    }
    max_err = std::max(max_err, std::abs(er.env.values[f] - truth));
  }
  const double dt = now_s() - t0;
  o.require(uncovered == 0,
            std::to_string(uncovered) + " trusted cells uncovered");
  o.require(max_err <= tol,
            "max error " + fmt(max_err) + " > tol " + fmt(tol));
  o.require(dt < 60.0, "runtime " + fmt(dt) + "s >= 60s");
  o.detail = "err " + fmt(max_err) + " <= " + fmt(tol) + " on " +
             std::to_string(compared) + " cells, " + fmt(dt) + "s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto geom = square_geometry(1, -3, 3, 201);
  auto w = supremand::sample(geom, [](const PairPoint& p) {
    return supremand::closed_form("ex_b_W", p);
  });
  auto er = supremand::slc_envelope_auto(w, 64);
  const double gap = er.report.schedule.gap();
  const double target = 1.0 / std::sqrt(2.0);
  double mn = std::numeric_limits<double>::infinity();
  for (double v : er.env.values)
    if (std::isfinite(v)) mn = std::min(mn, v);
  o.require(std::abs(mn - target) <= gap,
            "min " + fmt(mn) + " misses 1/sqrt(2) by " +
                fmt(std::abs(mn - target)) + " > gap " + fmt(gap));
  const double at0 = er.env.value_at(pp(0.0, 0.0));
  o.require(std::abs(at0 - target) <= gap,
            "value at the origin " + fmt(at0) + " misses 1/sqrt(2) by " +
                fmt(std::abs(at0 - target)));
  o.detail = "min " + fmt(mn) + ", origin " + fmt(at0) + ", gap " + fmt(gap);
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(20260825u);
  auto geom = square_geometry(1, -3, 3, 101);
  const Axis ax = geom.axes[0];
  int mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    auto e = th::random_hat_fixed(rng, ax);
    auto a = rasterize(hulls::sc_hull_boxes(e), geom);
    auto b = hulls::sc_hull_grid(rasterize(e, geom)).hull;
    if (!equal(a, b)) ++mismatches;
  }
  o.require(mismatches == 0,
            std::to_string(mismatches) + "/100 box-vs-grid hull mismatches");

  auto probe = square_geometry(1, -3, 3, 41);
  int chain_fail = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<FinitePairSet> chain = {th::random_hat_fixed(rng, ax)};
    for (int step = 0; step < 2; ++step) {
      auto next = chain.back();
      for (const auto& q : chain.back().points) {
        if (!approx_eq(q.first, q.second, next.tol)) {
          FinitePairSet n;
          n.m = 1;
          for (const auto& r : next.points)
            if (!(approx_eq(r, q, next.tol) ||
                  approx_eq(r, PairPoint{q.second, q.first}, next.tol)))
              n.add(r);
          n.normalize();
          next = n;
          break;
        }
      }
      chain.push_back(next);
    }
    auto res = hulls::nested_intersection_check(chain, probe);
    if (!res.equal) ++chain_fail;
  }
  o.require(chain_fail == 0,
            std::to_string(chain_fail) + "/100 nested chains disagree");
  o.detail = "100 box-vs-grid hulls, 100 nested chains";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937 rng(424242u);
  int base_bad = 0, hat_bad = 0, total = 0;
  for (int t = 0; t < 200; ++t) {
    const int m = t < 150 ? 1 : 2;
    auto e = th::random_pairs(rng, m, m == 1 ? 12 : 6);
    auto fam = cartesian::maximal_cartesian(SetHandle(e));
    auto orc = th::oracle_cartesian(e);
    total += static_cast<int>(orc.size());
    if (!th::bases_equal(fam.bases, orc, e.tol)) ++base_bad;
    auto viac = std::get<FinitePairSet>(
        cartesian::hat_via_cliques(SetHandle(e)));
    if (!equal(viac, hat(e))) ++hat_bad;
  }
  o.require(base_bad == 0,
            std::to_string(base_bad) + "/200 base enumerations disagree");
  o.require(hat_bad == 0,
            std::to_string(hat_bad) + "/200 clique hats disagree");
  o.detail = std::to_string(total) + " bases across 200 sets";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto spec = oscillation::make_spec(
      Point{-1.0}, Point{1.0}, functional::constant_function(Point{0.0}));
  std::vector<int> js = {4, 8, 16, 32, 64, 128, 256, 512};
  auto rep = oscillation::weak_star_report(spec, js);
  double prev = -1.0, worst = 0.0;
  for (std::size_t i = 0; i < rep.per_j.size(); ++i) {
    const auto& r = rep.per_j[i];
    o.require(r.violations == 0,
              "j=" + std::to_string(r.j) + ": " +
                  std::to_string(r.violations) + " value pairs left the wells");
    double err = -1.0;
    for (const auto& p : r.pairings)
      if (p.phi == "ind(0,8/16)") err = p.err;
    o.require(err >= 0.0, "midpoint indicator missing from the report");
    o.require(err <= 2.0 / r.j,
              "j=" + std::to_string(r.j) + ": err " + fmt(err) + " > 2/j");
    if (i > 0)
      o.require(err <= 0.75 * prev + 1e-15,
                "j=" + std::to_string(r.j) + ": err " + fmt(err) +
                    " fails the 0.75 contraction from " + fmt(prev));
    prev = err;
    worst = std::max(worst, err);
  }
  o.detail = "j in {4..512}, worst midpoint pairing err " + fmt(worst);
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto spec = oscillation::make_spec(
      Point{-1.0}, Point{1.0}, functional::constant_function(Point{0.0}));
  double worst = 0.0;
  for (int j : {8, 16, 32, 64, 128, 256, 512}) {
    auto uj = oscillation::build_sequence(spec, j);
    for (const auto& piece : spec.target.pieces) {
      auto em = oscillation::empirical_young_measure(uj, piece.a, piece.b);
      double wa = 0.0, wb = 0.0;
      for (std::size_t i = 0; i < em.atoms.size(); ++i) {
        if (approx_eq(em.atoms[i], spec.alpha, 1e-9)) wa = em.weights[i];
        if (approx_eq(em.atoms[i], spec.beta, 1e-9)) wb = em.weights[i];
      }
      const double da = std::abs(wa - 0.5), db = std::abs(wb - 0.5);
      o.require(da <= 1.0 / j && db <= 1.0 / j,
                "j=" + std::to_string(j) + ": weights (" + fmt(wa) + ", " +
                    fmt(wb) + ") leave the 1/j band around (1/2, 1/2)");
      worst = std::max(worst, std::max(da, db));
    }
  }
  o.detail = "j in {8..512}, worst weight deviation " + fmt(worst);
  return o;
}

Outcome criterion9() {
  Outcome o;
  auto a1 = ConvexSet::box2(0, 1, 0, 1);
  auto a2 = ConvexSet::box2(0.5, 1.5, 0.5, 1.5);
  auto tch = hulls::two_cartesian_hull(a1, a2);
  GridGeometry g4;
  g4.m = 2;
  g4.axes.assign(4, Axis{-0.25, 1.75, 21});
  g4.validate();
  auto closed = tch.rasterize(g4);
  auto inbox = [](const Point& p, double lo, double hi) {
    return p[0] >= lo && p[0] <= hi && p[1] >= lo && p[1] <= hi;
  };
  auto base = grid_from_predicate(g4, [&](const PairPoint& p) {
    const bool i1 = inbox(p.first, 0, 1) && inbox(p.second, 0, 1);
    const bool i2 = inbox(p.first, 0.5, 1.5) && inbox(p.second, 0.5, 1.5);
    return i1 || i2;
  });
  auto hr = hulls::sc_hull_grid(base);
  o.require(hr.converged, "4D grid hull did not converge");
  const bool fwd = th::covered_within_band(closed, hr.hull, 1);
  const bool bwd = th::covered_within_band(hr.hull, closed, 1);
  o.require(fwd, "closed-form cells missing from the grid hull band");
  o.require(bwd, "grid hull cells missing from the closed-form band");
  o.detail = "res 21^4, exact diff " +
             std::to_string(th::diff_cells(closed, hr.hull)) +
             " cells, all within one cell";
  return o;
}

Outcome criterion10() {
  Outcome o;
  {  // corner-well distance: the criterion must fail at level 0
    auto geom = square_geometry(1, -3.5, 3.5, 35);
    auto w = supremand::sample(geom, th::dist_corner_wells);
    supremand::LevelSchedule s;
    s.levels = {0.0};
    auto v = functional::lsc_check(w, s);
    o.require(!v.levels.empty() && !v.levels[0].holds,
              "corner-well distance passed at level 0");
    o.require(!v.all_hold, "corner-well verdict claims all levels hold");
  }
  {  // sampled closed-form envelope: holds at every trusted level
    auto geom = square_geometry(1, -3, 3, 101);
    auto w = supremand::sample(geom, [](const PairPoint& p) {
      return supremand::closed_form("ex_a_slc", p);
    });
    auto s = supremand::make_schedule(w.min_value(),
                                      w.boundary_min() - 1e-6, 16);
    auto v = functional::lsc_check(w, s);
    o.require(v.all_hold, "sampled closed-form envelope failed a level");
  }
  for (const char* name : {"ex72a_W", "ex72b_W"}) {  // m = 2, res 17
    auto geom = square_geometry(2, -2.5, 2.5, 17);
    auto w = supremand::sample(geom, [&](const PairPoint& p) {
      return supremand::closed_form(name, p);
    });
    const double bmin = w.boundary_min();
    const double hi = bmin - 1e-6 * std::max(1.0, std::abs(bmin));
    auto v = functional::lsc_check(
        w, supremand::make_schedule(w.min_value(), hi, 8));
    o.require(v.sufficient_only, std::string(name) + ": not flagged m>1");
    o.require(v.all_hold, std::string(name) + ": a trusted level failed");
  }
  o.detail = "level-0 failure witnessed; 16 + 2x8 trusted levels hold";
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "hat of the golden sets", criterion1},
      {2, "axis wells: hull re-hats to the origin cell", criterion2},
      {3, "envelope reproduces the corner-well closed form", criterion3},
      {4, "axis-well envelope minimum is 1/sqrt(2)", criterion4},
      {5, "box hulls == grid hulls; nested chains", criterion5},
      {6, "cliques == exhaustive search; hat rebuilt", criterion6},
      {7, "oscillation pairings decay at rate 1/j", criterion7},
      {8, "empirical weights within 1/j of (1/2, 1/2)", criterion8},
      {9, "two-product hull matches the 4D grid hull", criterion9},
      {10, "lsc verdicts: failure and certification", criterion10},
  };
  int failures = 0;
  for (const auto& e : entries) {
    Outcome o;
    const double t0 = now_s();
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double dt = now_s() - t0;
    std::printf("[%2d] %s  %-48s (%.2fs)%s%s\n", e.id,
                o.pass ? "PASS" : "FAIL", e.name, dt,
                o.detail.empty() ? "" : "  -- ", o.detail.c_str());
    if (!o.pass) ++failures;
  }
  if (failures > 0)
    std::printf("%d criterion(s) failed\n", failures);
  else
    std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
