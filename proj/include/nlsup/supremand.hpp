#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nlsup/grid.hpp"
#include "nlsup/sc_hull.hpp"

namespace nlsup::supremand {

using setcore::GridGeometry;
using setcore::LatticeGrid;
using setcore::PairPoint;

// Supremand sampled at the cell centres of a grid geometry. Values are
// finite on input; +inf is the sentinel for "above the trusted range" and
// appears only in envelope outputs.
struct SampledSupremand {
  GridGeometry geom;
  std::vector<double> values;

  void validate(bool allow_inf = false) const;
  // Minimum over the boundary ring (cells with an extreme index on any axis).
  double boundary_min() const;
  double min_value() const;
  bool has_sentinel() const;
  // Nearest-cell lookup; throws DimensionError outside the ranges.
  double value_at(const PairPoint& p) const;
};

SampledSupremand sample(const GridGeometry& geom,
                        const std::function<double(const PairPoint&)>& f,
                        Exec exec = Exec::Parallel);

struct SublevelResult {
  LatticeGrid grid;
  // False once the level reaches the boundary minimum: the sublevel set may
  // then be clipped by the grid ranges.
  bool trusted = false;
};
SublevelResult sublevel(const SampledSupremand& w, double c);

// Pointwise hat-symmetrization: max of W(xi,zeta), W(zeta,xi), W(xi,xi),
// W(zeta,zeta). Requires a square geometry; idempotent; sublevel sets of the
// result equal hat(sublevel(W, c)) cellwise.
SampledSupremand hat_supremand(const SampledSupremand& w,
                               Exec exec = Exec::Parallel);

struct LevelSchedule {
  std::vector<double> levels;  // strictly increasing

  void validate() const;
  double gap() const;  // max consecutive spacing (0 for one level)
};
LevelSchedule make_schedule(double lo, double hi, int n);
LevelSchedule refine(const LevelSchedule& s);  // insert midpoints

struct CoercivityReport {
  double boundary_min_raw = 0.0;  // boundary minimum of the input samples
  double boundary_min_hat = 0.0;  // boundary minimum after hat-symmetrization
  // Largest usable level, strictly below boundary_min_hat; -inf when no
  // level is trusted. Envelopes are certified only below this value.
  double trusted_max = 0.0;
  bool has_trusted_range = false;
};
CoercivityReport coercivity_report(const SampledSupremand& w);

struct LevelHullStats {
  double level = 0.0;
  int iterations = 0;
  bool converged = false;
  std::size_t cells_added = 0;
};
struct EnvelopeReport {
  LevelSchedule schedule;
  double level_gap = 0.0;
  double trusted_max = 0.0;
  std::vector<LevelHullStats> hulls;
  // Per-run cross-check at three sampled levels that the sublevel sets of
  // hat_supremand(W) equal hat(sublevel(W, c)).
  bool level_oracle_checked = false;
  // True for m == 1, where the per-level construction is exact on the grid;
  // for m == 2 the result is reported as a candidate envelope.
  bool exact = false;
};
struct EnvelopeResult {
  SampledSupremand env;
  EnvelopeReport report;
};

// Separately level-convex envelope: per-level separately convex hulls of the
// hat-symmetrized sublevel sets, swept from below. A cell's value is the
// first scheduled level whose hull covers it (never above hat(W) there);
// cells never covered get +inf. All levels must stay strictly below the
// boundary minimum of hat(W); otherwise UntrustedScheduleError is thrown.
EnvelopeResult slc_envelope(const SampledSupremand& w,
                            const LevelSchedule& sched,
                            Exec exec = Exec::Parallel);
// Builds the schedule from the coercivity report: n levels from min hat(W)
// up to just below the boundary minimum.
EnvelopeResult slc_envelope_auto(const SampledSupremand& w, int n_levels,
                                 Exec exec = Exec::Parallel);

// Closed forms for the bundled examples:
//   ex_a_W, ex_a_slc, ex_b_W, ex_b_slc   (m = 1 distance supremands)
//   ex72a_W, ex72b_W                     (m = 2 two-well distance supremands)
double closed_form(const std::string& name, const PairPoint& p);
int closed_form_dim(const std::string& name);
std::vector<std::string> closed_form_names();

}  // namespace nlsup::supremand
