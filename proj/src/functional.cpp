#include "nlsup/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlsup/cartesian.hpp"

namespace nlsup::functional {

using setcore::PairPoint;
using setcore::Point;
using setcore::SetHandle;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

SupremandView view(const supremand::SampledSupremand& w) {
  SupremandView v;
  v.m = w.geom.m;
  v.f = [w](const PairPoint& p) { return w.value_at(p); };
  return v;
}

SupremandView view_closed_form(const std::string& name) {
  SupremandView v;
  v.m = supremand::closed_form_dim(name);
  v.f = [name](const PairPoint& p) {
    return supremand::closed_form(name, p);
  };
  return v;
}

double eval_J(const SupremandView& w, const SimpleFunction& u) {
  u.validate();
  if (u.m != w.m) {
    throw DimensionError("function values and supremand dimension differ");
  }
  const std::vector<Point> vals = u.value_set();
  double best = -kInf;
  for (const Point& a : vals) {
    for (const Point& b : vals) {
      best = std::max(best, w.f(setcore::pp(a, b)));
    }
  }
  return best;
}

double eval_Jrlx(const SupremandView& w_slc, const SimpleFunction& u) {
  const double v = eval_J(w_slc, u);
  if (v == kInf) {
    throw UntrustedScheduleError(
        "relaxed evaluation hit the +inf sentinel: the function leaves the "
        "trusted region of the envelope");
  }
  return v;
}

bool in_A_E(const SetHandle& e, const SimpleFunction& u) {
  u.validate();
  if (u.m != setcore::dim(e)) {
    throw DimensionError("function values and set dimension differ");
  }
  const std::vector<Point> vals = u.value_set();
  for (const Point& a : vals) {
    for (const Point& b : vals) {
      if (!setcore::member(e, setcore::pp(a, b))) return false;
    }
  }
  return true;
}

double indicator_I(const SetHandle& e, const SimpleFunction& u) {
  return in_A_E(e, u) ? 0.0 : kInf;
}

LscVerdict lsc_check(const supremand::SampledSupremand& w,
                     const supremand::LevelSchedule& sched, Exec exec) {
  w.validate(true);  // envelopes carry the +inf sentinel
  sched.validate();
  if (!(sched.levels.back() < w.boundary_min())) {
    throw UntrustedScheduleError(
        "lsc check rejects levels at or above the boundary minimum");
  }
  LscVerdict verdict;
  verdict.sufficient_only = w.geom.m > 1;
  verdict.all_hold = true;
  for (double c : sched.levels) {
    LevelVerdict lv;
    lv.level = c;
    const setcore::LatticeGrid base =
        setcore::hat(supremand::sublevel(w, c).grid, exec);
    const setcore::LatticeGrid hull =
        hulls::sc_hull_grid(base, exec).hull;
    const setcore::LatticeGrid rehat = setcore::hat(hull, exec);
    lv.holds = setcore::equal(rehat, base);
    if (!lv.holds) {
      for (std::size_t f = 0; f < base.occ.size(); ++f) {
        if (rehat.occ[f] != base.occ[f]) {
          lv.witness_cell = f;
          lv.witness_point = w.geom.cell_center(f);
          break;
        }
      }
      verdict.all_hold = false;
    }
    verdict.levels.push_back(std::move(lv));
  }
  return verdict;
}

}  // namespace nlsup::functional
