#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "test_helpers.hpp"

using namespace nlsup;
using namespace nlsup::setcore;
using namespace nlsup::supremand;

namespace {
const double kInf = std::numeric_limits<double>::infinity();

SampledSupremand hand_grid_3x3(std::vector<double> v) {
  SampledSupremand w;
  w.geom = square_geometry(1, 0, 3, 3);
  w.values = std::move(v);
  return w;
}
}  // namespace

TEST_CASE("sampling and lookup") {
  auto geom = square_geometry(1, -3, 3, 101);
  auto w = sample(geom, [](const PairPoint& p) {
    return closed_form("ex_a_W", p);
  });
  w.validate();
  CHECK(w.values.size() == geom.cell_count());
  for (std::size_t f : {std::size_t{0}, std::size_t{5000}, w.values.size() - 1})
    CHECK(w.value_at(geom.cell_center(f)) == w.values[f]);
  CHECK_THROWS_AS(w.value_at(pp(4.0, 0.0)), DimensionError);
  // nearest-cell semantics inside a cell
  auto c = geom.cell_center(std::size_t{0});
  CHECK(w.value_at(pp(c.first[0] + 0.01, c.second[0])) == w.values[0]);
}

TEST_CASE("validation rejects non-finite samples") {
  auto w = hand_grid_3x3({1, 2, 3, 4, 5, 6, 7, 8, 9});
  w.validate();
  w.values[4] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(w.validate(), ParseError);
  w.values[4] = kInf;
  CHECK_THROWS_AS(w.validate(), ParseError);
  w.validate(true);  // sentinel allowed for envelopes
  CHECK(w.has_sentinel());
  w.values[4] = -kInf;
  CHECK_THROWS_AS(w.validate(true), ParseError);
}

TEST_CASE("boundary minimum scans the ring") {
  auto w = hand_grid_3x3({9, 8, 7, 6, 0, 5, 4, 3, 2});
  CHECK(w.min_value() == 0.0);
  CHECK(w.boundary_min() == 2.0);  // centre cell (value 0) is interior
}

TEST_CASE("sublevel sets and the trust flag") {
  auto w = hand_grid_3x3({9, 8, 7, 6, 0, 5, 4, 3, 2});
  auto s1 = sublevel(w, 1.0);
  CHECK(s1.trusted);
  CHECK(s1.grid.count() == 1);
  auto s2 = sublevel(w, 2.0);  // reaches the boundary minimum
  CHECK_FALSE(s2.trusted);
  CHECK(s2.grid.count() == 2);
}

TEST_CASE("hat-symmetrization is the pointwise four-term max") {
  std::mt19937 rng(404u);
  std::uniform_real_distribution<double> val(0.0, 5.0);
  auto geom = square_geometry(1, -1, 1, 5);
  SampledSupremand w;
  w.geom = geom;
  w.values.resize(geom.cell_count());
  for (auto& v : w.values) v = val(rng);
  auto wh = hat_supremand(w);
  const int n = 5;
  auto at = [&](const std::vector<double>& a, int i, int j) {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double expect = std::max(
          std::max(at(w.values, i, j), at(w.values, j, i)),
          std::max(at(w.values, i, i), at(w.values, j, j)));
      CHECK(at(wh.values, i, j) == expect);
    }
  // idempotent
  auto wh2 = hat_supremand(wh);
  CHECK(wh2.values == wh.values);
  // sublevel identity: sub_c(hat W) == hat(sub_c W)
  for (double c : {1.0, 2.5, 4.0}) {
    auto lhs = sublevel(wh, c).grid;
    auto rhs = hat(sublevel(w, c).grid);
    CHECK(equal(lhs, rhs));
  }
}

TEST_CASE("hat-symmetrization needs a square geometry") {
  SampledSupremand w;
  w.geom.m = 1;
  w.geom.axes = {Axis{0, 1, 2}, Axis{0, 2, 2}};
  w.values = {0, 0, 0, 0};
  CHECK_THROWS_AS(hat_supremand(w), PreconditionError);
}

TEST_CASE("level schedules") {
  LevelSchedule s;
  s.levels = {0.0, 1.0, 1.5};
  s.validate();
  CHECK(s.gap() == doctest::Approx(1.0));
  s.levels = {0.0, 0.0};
  CHECK_THROWS_AS(s.validate(), PreconditionError);
  s.levels = {};
  CHECK_THROWS_AS(s.validate(), PreconditionError);

  auto mk = make_schedule(0.0, 2.0, 5);
  REQUIRE(mk.levels.size() == 5);
  CHECK(mk.levels.front() == 0.0);
  CHECK(mk.levels.back() == 2.0);
  auto rf = refine(mk);
  CHECK(rf.levels.size() == 9);
  CHECK(rf.gap() == doctest::Approx(mk.gap() / 2));
  CHECK(make_schedule(1.0, 1.0, 4).levels.size() == 1);
  CHECK_THROWS_AS(make_schedule(0.0, 1.0, 0), PreconditionError);
}

TEST_CASE("coercivity report on a distance supremand") {
  auto geom = square_geometry(1, -3, 3, 101);
  auto w = sample(geom, [](const PairPoint& p) {
    return closed_form("ex_a_W", p);
  });
  auto rep = coercivity_report(w);
  CHECK(rep.has_trusted_range);
  CHECK(rep.boundary_min_raw == doctest::Approx(1.9703).epsilon(1e-3));
  CHECK(rep.boundary_min_hat ==
        doctest::Approx(1.9703 * std::sqrt(2.0)).epsilon(1e-3));
  CHECK(rep.trusted_max < rep.boundary_min_hat);
  CHECK(rep.trusted_max > 2.7);
}

TEST_CASE("envelope construction and report") {
  auto geom = square_geometry(1, -3, 3, 101);
  auto w = sample(geom, [](const PairPoint& p) {
    return closed_form("ex_a_W", p);
  });
  auto er = slc_envelope_auto(w, 32);
  const auto& env = er.env;
  env.validate(true);
  CHECK(er.report.exact);
  CHECK(er.report.level_oracle_checked);
  CHECK(er.report.hulls.size() == 32);
  CHECK(er.report.schedule.levels.size() == 32);
  for (const auto& hs : er.report.hulls) CHECK(hs.converged);

  auto wh = hat_supremand(w);
  std::size_t covered = 0;
  for (std::size_t f = 0; f < env.values.size(); ++f) {
    if (!std::isfinite(env.values[f])) continue;
    ++covered;
    CHECK(env.values[f] <= wh.values[f] + 1e-12);          // never above hat W
    CHECK(env.values[f] >= er.report.schedule.levels.front() - 1e-12);
  }
  CHECK(covered > env.values.size() / 2);
  CHECK(env.has_sentinel());  // the far corners stay uncovered at this size

  // envelope against the closed form, mid-resolution
  const double gap = er.report.schedule.gap();
  const double tol = gap + 2.0 * geom.axes[0].h() * std::sqrt(2.0);
  const double cap = er.report.schedule.levels.back() - gap;
  double max_err = 0.0;
  for (std::size_t f = 0; f < env.values.size(); ++f) {
    auto c = geom.cell_center(f);
    double truth = closed_form("ex_a_slc", c);
    if (truth > cap) continue;
    REQUIRE(std::isfinite(env.values[f]));
    max_err = std::max(max_err, std::abs(env.values[f] - truth));
  }
  CHECK(max_err <= tol);
}

TEST_CASE("explicit schedules must stay below the boundary minimum") {
  auto geom = square_geometry(1, -3, 3, 41);
  auto w = sample(geom, [](const PairPoint& p) {
    return closed_form("ex_a_W", p);
  });
  auto wh = hat_supremand(w);
  LevelSchedule bad;
  bad.levels = {0.0, wh.boundary_min() + 1.0};
  CHECK_THROWS_AS(slc_envelope(w, bad), UntrustedScheduleError);
}

TEST_CASE("auto envelope equals the explicit schedule it derives") {
  auto geom = square_geometry(1, -3, 3, 41);
  auto w = sample(geom, [](const PairPoint& p) {
    return closed_form("ex_b_W", p);
  });
  auto rep = coercivity_report(w);
  auto a = slc_envelope_auto(w, 12);
  auto wh = hat_supremand(w);
  auto sched = make_schedule(wh.min_value(), rep.trusted_max, 12);
  auto b = slc_envelope(w, sched);
  CHECK(a.env.values == b.env.values);
}

TEST_CASE("closed forms") {
  CHECK(closed_form("ex_a_slc", pp(0, 0)) == 0.0);
  CHECK(closed_form("ex_a_slc", pp(2, 0)) == doctest::Approx(std::sqrt(2.0)));
  CHECK(closed_form("ex_a_W", pp(1, 1)) == 0.0);
  CHECK(closed_form("ex_a_W", pp(1, -1)) == 0.0);
  CHECK(closed_form("ex_b_W", pp(1, 0)) == 0.0);
  CHECK(closed_form("ex_b_slc", pp(0, 0)) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(closed_form("ex_b_slc", pp(1, 0)) == doctest::Approx(1.0));
  auto p2 = pp2(1, 0, 1, 0);
  CHECK(closed_form("ex72a_W", p2) == 0.0);
  CHECK(closed_form("ex72b_W", pp2(1, 0, -1, 0)) == 0.0);
  CHECK(closed_form_dim("ex_a_W") == 1);
  CHECK(closed_form_dim("ex72b_W") == 2);
  CHECK_THROWS_AS(closed_form("nope", pp(0, 0)), ParseError);
  CHECK(closed_form_names().size() == 6);
}
