#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nlsup/set_ops.hpp"
#include "nlsup/simple_function.hpp"
#include "nlsup/supremand.hpp"

namespace nlsup::functional {

// Evaluation view over a supremand: sampled (nearest-cell lookup) or a
// closed form from the bundled library.
struct SupremandView {
  int m = 1;
  std::function<double(const setcore::PairPoint&)> f;
};
SupremandView view(const supremand::SampledSupremand& w);
SupremandView view_closed_form(const std::string& name);

// J(u) = max over ordered value pairs (i, i'), including i = i', of
// W(v_i, v_{i'}). Exact for simple functions.
double eval_J(const SupremandView& w, const SimpleFunction& u);
// Same evaluation against an envelope; +inf lookups (u leaving the trusted
// region) raise UntrustedScheduleError.
double eval_Jrlx(const SupremandView& w_slc, const SimpleFunction& u);

// True iff every ordered value pair of u lies in E.
bool in_A_E(const setcore::SetHandle& e, const SimpleFunction& u);
// 0 when u conforms to E, +inf otherwise.
double indicator_I(const setcore::SetHandle& e, const SimpleFunction& u);

struct LevelVerdict {
  double level = 0.0;
  bool holds = false;
  // A cell lost when re-hatting the hull, when the criterion fails.
  std::optional<std::size_t> witness_cell;
  std::optional<setcore::PairPoint> witness_point;
};
struct LscVerdict {
  std::vector<LevelVerdict> levels;
  bool all_hold = false;
  // For m > 1 the level criterion is sufficient but not known to be
  // necessary, so a passing verdict certifies and a failing one is reported
  // as "criterion violated" rather than a disproof.
  bool sufficient_only = false;
};
// Level-set criterion for weak* lower semicontinuity of the induced
// functional: at each scheduled level, hat(hull(hat(sublevel))) must equal
// hat(sublevel). Levels at or above the boundary minimum of W are rejected.
LscVerdict lsc_check(const supremand::SampledSupremand& w,
                     const supremand::LevelSchedule& sched,
                     Exec exec = Exec::Parallel);

}  // namespace nlsup::functional
