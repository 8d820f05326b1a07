#include "nlsup/supremand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlsup::supremand {

using setcore::Axis;
using setcore::PairPoint;
using setcore::Point;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void advance(std::vector<int>& idx, const std::vector<Axis>& axes) {
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] < axes[k].n) return;
    idx[k] = 0;
  }
}

bool on_boundary(const std::vector<int>& idx, const std::vector<Axis>& axes) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] == 0 || idx[k] == axes[k].n - 1) return true;
  }
  return false;
}

}  // namespace

void SampledSupremand::validate(bool allow_inf) const {
  geom.validate();
  if (values.size() != geom.cell_count()) {
    throw ParseError("supremand sample size does not match geometry");
  }
  for (double v : values) {
    if (std::isnan(v) || v == -kInf || (!allow_inf && v == kInf)) {
      throw ParseError(allow_inf
                           ? "supremand values must not be NaN or -inf"
                           : "supremand values must be finite");
    }
  }
}

double SampledSupremand::boundary_min() const {
  double best = kInf;
  std::vector<int> idx(geom.axes.size(), 0);
  const std::size_t n = geom.cell_count();
  for (std::size_t f = 0; f < n; ++f) {
    if (on_boundary(idx, geom.axes)) best = std::min(best, values[f]);
    advance(idx, geom.axes);
  }
  return best;
}

double SampledSupremand::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

bool SampledSupremand::has_sentinel() const {
  return std::any_of(values.begin(), values.end(),
                     [](double v) { return v == kInf; });
}

double SampledSupremand::value_at(const PairPoint& p) const {
  std::vector<int> idx;
  if (!geom.locate(p, idx)) {
    throw DimensionError("value lookup outside the sampled ranges");
  }
  return values[geom.flat(idx)];
}

SampledSupremand sample(const setcore::GridGeometry& geom,
                        const std::function<double(const PairPoint&)>& f,
                        Exec exec) {
  geom.validate();
  SampledSupremand w;
  w.geom = geom;
  w.values.assign(geom.cell_count(), 0.0);
  par_for(geom.cell_count(), exec, [&](std::size_t c) {
    w.values[c] = f(geom.cell_center(c));
  });
  w.validate();
  return w;
}

SublevelResult sublevel(const SampledSupremand& w, double c) {
  SublevelResult r;
  r.grid = setcore::empty_grid(w.geom);
  for (std::size_t f = 0; f < w.values.size(); ++f) {
    r.grid.occ[f] = w.values[f] <= c ? 1 : 0;
  }
  r.trusted = c < w.boundary_min();
  return r;
}

SampledSupremand hat_supremand(const SampledSupremand& w, Exec exec) {
  w.validate(true);
  if (!w.geom.square()) {
    throw PreconditionError(
        "hat-symmetrization requires a square grid geometry");
  }
  const int m = w.geom.m;
  std::size_t block = 1;
  for (int k = 0; k < m; ++k) {
    block *= static_cast<std::size_t>(w.geom.axes[k].n);
  }
  SampledSupremand out;
  out.geom = w.geom;
  out.values.assign(w.values.size(), 0.0);
  par_for(w.values.size(), exec, [&](std::size_t f) {
    const std::size_t i = f / block;
    const std::size_t j = f % block;
    const double a = w.values[i * block + j];
    const double b = w.values[j * block + i];
    const double c = w.values[i * block + i];
    const double d = w.values[j * block + j];
    out.values[f] = std::max(std::max(a, b), std::max(c, d));
  });
  return out;
}

void LevelSchedule::validate() const {
  if (levels.empty()) throw PreconditionError("empty level schedule");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (!std::isfinite(levels[k])) {
      throw PreconditionError("levels must be finite");
    }
    if (k > 0 && !(levels[k] > levels[k - 1])) {
      throw PreconditionError("levels must be strictly increasing");
    }
  }
}

double LevelSchedule::gap() const {
  double g = 0.0;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    g = std::max(g, levels[k] - levels[k - 1]);
  }
  return g;
}

LevelSchedule make_schedule(double lo, double hi, int n) {
  if (n < 1) throw PreconditionError("schedule needs at least one level");
  LevelSchedule s;
  if (n == 1 || lo == hi) {
    s.levels = {lo};
    return s;
  }
  s.levels.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    s.levels[static_cast<std::size_t>(k)] =
        lo + (hi - lo) * static_cast<double>(k) / (n - 1);
  }
  s.validate();
  return s;
}

LevelSchedule refine(const LevelSchedule& s) {
  s.validate();
  LevelSchedule r;
  for (std::size_t k = 0; k < s.levels.size(); ++k) {
    r.levels.push_back(s.levels[k]);
    if (k + 1 < s.levels.size()) {
      r.levels.push_back(0.5 * (s.levels[k] + s.levels[k + 1]));
    }
  }
  r.validate();
  return r;
}

CoercivityReport coercivity_report(const SampledSupremand& w) {
  w.validate();
  const SampledSupremand wh = hat_supremand(w, Exec::Serial);
  CoercivityReport rep;
  rep.boundary_min_raw = w.boundary_min();
  rep.boundary_min_hat = wh.boundary_min();
  const double margin =
      1e-9 * std::max(1.0, std::abs(rep.boundary_min_hat));
  rep.trusted_max = rep.boundary_min_hat - margin;
  rep.has_trusted_range = wh.min_value() <= rep.trusted_max;
  if (!rep.has_trusted_range) rep.trusted_max = -kInf;
  return rep;
}

EnvelopeResult slc_envelope(const SampledSupremand& w,
                            const LevelSchedule& sched, Exec exec) {
  w.validate();
  sched.validate();
  const SampledSupremand wh = hat_supremand(w, exec);
  const double bmin = wh.boundary_min();
  if (!(sched.levels.back() < bmin)) {
    throw UntrustedScheduleError(
        "level schedule reaches the boundary minimum of hat(W); sublevel "
        "sets would be clipped by the grid ranges");
  }

  EnvelopeResult res;
  res.report.schedule = sched;
  res.report.level_gap = sched.gap();
  res.report.trusted_max = bmin;
  res.report.exact = w.geom.m == 1;

  // Cross-check at three sampled levels that sublevels of hat(W) equal
  // hat(sublevel(W)); the two sides are computed by independent code paths.
  {
    const std::size_t last = sched.levels.size() - 1;
    for (std::size_t k : {std::size_t{0}, last / 2, last}) {
      const setcore::LatticeGrid lhs = sublevel(wh, sched.levels[k]).grid;
      const setcore::LatticeGrid rhs =
          setcore::hat(sublevel(w, sched.levels[k]).grid, exec);
      if (!setcore::equal(lhs, rhs)) {
        throw ToleranceFailure(
            "level-set identity violated: sublevel(hat W) != "
            "hat(sublevel W)");
      }
    }
    res.report.level_oracle_checked = true;
  }

  const std::size_t nlev = sched.levels.size();
  std::vector<hulls::HullResult> hr(nlev);
  par_for(nlev, exec, [&](std::size_t k) {
    hr[k] = hulls::sc_hull_grid(sublevel(wh, sched.levels[k]).grid,
                                Exec::Serial);
  });
  res.report.hulls.resize(nlev);
  for (std::size_t k = 0; k < nlev; ++k) {
    if (!hr[k].converged) {
      throw ToleranceFailure("per-level hull failed to converge");
    }
    res.report.hulls[k] = {sched.levels[k], hr[k].iterations,
                           hr[k].converged, hr[k].cells_added};
  }

  res.env.geom = w.geom;
  res.env.values.assign(w.values.size(), kInf);
  par_for(w.values.size(), exec, [&](std::size_t f) {
    for (std::size_t k = 0; k < nlev; ++k) {
      if (hr[k].hull.occ[f]) {
        // First covering level, but never above hat(W) at the cell.
        res.env.values[f] = std::min(sched.levels[k], wh.values[f]);
        return;
      }
    }
  });
  return res;
}

EnvelopeResult slc_envelope_auto(const SampledSupremand& w, int n_levels,
                                 Exec exec) {
  const CoercivityReport rep = coercivity_report(w);
  if (!rep.has_trusted_range) {
    throw UntrustedScheduleError(
        "no trusted levels: the minimum reaches the boundary minimum");
  }
  const SampledSupremand wh = hat_supremand(w, exec);
  const LevelSchedule sched =
      make_schedule(wh.min_value(), rep.trusted_max, n_levels);
  return slc_envelope(w, sched, exec);
}

// ---- closed forms ----------------------------------------------------------

namespace {

double dist_to_wells(const PairPoint& p,
                     const std::vector<std::pair<double, double>>& wells) {
  double best = kInf;
  for (const auto& [a, b] : wells) {
    const double dx = p.first[0] - a;
    const double dz = p.second[0] - b;
    best = std::min(best, std::hypot(dx, dz));
  }
  return best;
}

double pair_inf_norm(const PairPoint& p) {
  return std::max(std::abs(p.first[0]), std::abs(p.second[0]));
}

double ball_dist(const Point& x, double w1, double w2) {
  return std::hypot(x[0] - w1, x[1] - w2);
}

}  // namespace

double closed_form(const std::string& name, const PairPoint& p) {
  if (name == "ex_a_W") {
    return dist_to_wells(p, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  }
  if (name == "ex_a_slc") {
    return std::sqrt(2.0) * std::max(pair_inf_norm(p) - 1.0, 0.0);
  }
  if (name == "ex_b_W") {
    return dist_to_wells(p, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
  }
  if (name == "ex_b_slc") {
    const double s = pair_inf_norm(p);
    if (s < 0.5) return 1.0 / std::sqrt(2.0);
    const double t = 2.0 * s - 1.0;
    return std::sqrt(0.5 * t * t + 0.5);
  }
  if (name == "ex72a_W") {
    const double da = std::max(ball_dist(p.first, 1.0, 0.0),
                               ball_dist(p.second, 1.0, 0.0));
    const double db = std::max(ball_dist(p.first, -1.0, 0.0),
                               ball_dist(p.second, -1.0, 0.0));
    return std::min(da, db);
  }
  if (name == "ex72b_W") {
    const double da = std::max(ball_dist(p.first, 1.0, 0.0),
                               ball_dist(p.second, -1.0, 0.0));
    const double db = std::max(ball_dist(p.first, -1.0, 0.0),
                               ball_dist(p.second, 1.0, 0.0));
    return std::min(da, db);
  }
  throw ParseError("unknown closed form: " + name);
}

int closed_form_dim(const std::string& name) {
  if (name == "ex72a_W" || name == "ex72b_W") return 2;
  if (name == "ex_a_W" || name == "ex_a_slc" || name == "ex_b_W" ||
      name == "ex_b_slc") {
    return 1;
  }
  throw ParseError("unknown closed form: " + name);
}

std::vector<std::string> closed_form_names() {
  return {"ex_a_W", "ex_a_slc", "ex_b_W", "ex_b_slc", "ex72a_W", "ex72b_W"};
}

}  // namespace nlsup::supremand
