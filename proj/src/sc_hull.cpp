#include "nlsup/sc_hull.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nlsup/cartesian.hpp"

namespace nlsup::hulls {

using setcore::Axis;
using setcore::ConvexSet;
using setcore::P2;
using setcore::Point;

namespace {

// Geometry split used by the sweeps: with row-major flat indices and the
// first-component axes leading, flat = I * second_count + J, where I and J
// are the row-major block indices.
struct BlockView {
  std::size_t first_count = 1;
  std::size_t second_count = 1;
};

BlockView block_view(const setcore::GridGeometry& geom) {
  BlockView v;
  for (int k = 0; k < geom.m; ++k) {
    v.first_count *= static_cast<std::size_t>(geom.axes[k].n);
    v.second_count *= static_cast<std::size_t>(geom.axes[geom.m + k].n);
  }
  return v;
}

double hull_tol(const setcore::GridGeometry& geom) {
  double span = 1.0;
  for (const Axis& a : geom.axes) span = std::max(span, a.hi - a.lo);
  return kDefaultTol * span;
}

// Discrete convex fill of one slice for m == 1: occupy every cell between
// the extremes of the occupied ones. `at(i)` maps a local index to the flat
// grid index.
template <class At>
std::size_t fill_interval(std::uint8_t* occ, int n, const At& at) {
  int lo = -1, hi = -1;
  for (int i = 0; i < n; ++i) {
    if (occ[at(i)]) {
      if (lo < 0) lo = i;
      hi = i;
    }
  }
  std::size_t added = 0;
  if (lo >= 0) {
    for (int i = lo + 1; i < hi; ++i) {
      if (!occ[at(i)]) {
        occ[at(i)] = 1;
        ++added;
      }
    }
  }
  return added;
}

// Discrete convex fill of one slice for m == 2: occupy every cell whose
// centre lies in the convex hull polygon of the occupied centres.
// Conservative: centres outside the polygon (within tol) are never added.
template <class At>
std::size_t fill_planar(std::uint8_t* occ, const Axis& ax, const Axis& ay,
                        double tol, const At& at) {
  std::vector<P2> pts;
  for (int i = 0; i < ax.n; ++i) {
    for (int j = 0; j < ay.n; ++j) {
      if (occ[at(i, j)]) pts.push_back({ax.center(i), ay.center(j)});
    }
  }
  if (pts.size() <= 1) return 0;
  const std::vector<P2> poly = setcore::hull2d(std::move(pts));
  std::size_t added = 0;
  for (int i = 0; i < ax.n; ++i) {
    for (int j = 0; j < ay.n; ++j) {
      const std::size_t f = at(i, j);
      if (!occ[f] && setcore::in_hull2d(poly, {ax.center(i), ay.center(j)},
                                        tol)) {
        occ[f] = 1;
        ++added;
      }
    }
  }
  return added;
}

}  // namespace

HullResult sc_hull_grid(const LatticeGrid& g, Exec exec) {
  g.validate();
  const int m = g.geom.m;
  if (m != 1 && m != 2) {
    throw PreconditionError("grid hulls support m == 1 or m == 2");
  }
  HullResult res;
  res.hull = g;
  const BlockView v = block_view(g.geom);
  const double tol = hull_tol(g.geom);
  std::uint8_t* occ = res.hull.occ.data();

  // Convexify first-component slices (second component fixed).
  auto sweep_first = [&]() {
    std::vector<std::size_t> added(v.second_count, 0);
    par_for(v.second_count, exec, [&](std::size_t jf) {
      if (m == 1) {
        const int n = g.geom.axes[0].n;
        added[jf] = fill_interval(occ, n, [&](int i) {
          return static_cast<std::size_t>(i) * v.second_count + jf;
        });
      } else {
        added[jf] = fill_planar(
            occ, g.geom.axes[0], g.geom.axes[1], tol, [&](int i0, int i1) {
              const std::size_t iflat =
                  static_cast<std::size_t>(i0) *
                      static_cast<std::size_t>(g.geom.axes[1].n) +
                  static_cast<std::size_t>(i1);
              return iflat * v.second_count + jf;
            });
      }
    });
    return std::accumulate(added.begin(), added.end(), std::size_t{0});
  };

  // Convexify second-component slices (first component fixed).
  auto sweep_second = [&]() {
    std::vector<std::size_t> added(v.first_count, 0);
    par_for(v.first_count, exec, [&](std::size_t iflat) {
      const std::size_t base = iflat * v.second_count;
      if (m == 1) {
        const int n = g.geom.axes[1].n;
        added[iflat] = fill_interval(occ, n, [&](int j) {
          return base + static_cast<std::size_t>(j);
        });
      } else {
        added[iflat] = fill_planar(
            occ, g.geom.axes[2], g.geom.axes[3], tol, [&](int j0, int j1) {
              return base +
                     static_cast<std::size_t>(j0) *
                         static_cast<std::size_t>(g.geom.axes[3].n) +
                     static_cast<std::size_t>(j1);
            });
      }
    });
    return std::accumulate(added.begin(), added.end(), std::size_t{0});
  };

  const int cap = static_cast<int>(g.geom.cell_count()) + 2;
  while (res.iterations < cap) {
    const std::size_t grown = sweep_first() + sweep_second();
    res.cells_added += grown;
    ++res.iterations;
    if (grown == 0) {
      res.converged = true;
      break;
    }
  }
  return res;
}

BoxUnion sc_hull_boxes(const FinitePairSet& e) {
  e.validate();
  if (e.m != 1) {
    throw PreconditionError("exact box hulls require m == 1");
  }
  if (!setcore::equal(e, setcore::hat(e))) {
    throw PreconditionError(
        "exact box hulls require a hat-fixed set (E = hat(E))");
  }
  BoxUnion out{e.m, e.tol, e.points};
  return out;
}

DexSet dex_prune(const FinitePairSet& e) {
  e.validate();
  DexSet out;
  out.generators.m = e.m;
  out.generators.tol = e.tol;
  auto same_interval = [&](const PairPoint& a, const PairPoint& b) {
    return (setcore::approx_eq(a.first, b.first, e.tol) &&
            setcore::approx_eq(a.second, b.second, e.tol)) ||
           (setcore::approx_eq(a.first, b.second, e.tol) &&
            setcore::approx_eq(a.second, b.first, e.tol));
  };
  for (std::size_t i = 0; i < e.points.size(); ++i) {
    const PairPoint& p = e.points[i];
    bool dominated = false;
    for (std::size_t j = 0; j < e.points.size() && !dominated; ++j) {
      if (j == i) continue;
      const PairPoint& q = e.points[j];
      if (same_interval(p, q)) continue;
      if (setcore::on_segment(p.first, q.first, q.second, e.tol) &&
          setcore::on_segment(p.second, q.first, q.second, e.tol)) {
        dominated = true;
      }
    }
    if (!dominated) {
      out.kept.push_back(i);
      out.generators.points.push_back(p);
    }
  }
  return out;
}

bool TwoCartesianHull::member(const PairPoint& p) const {
  const Point& x = p.first;
  const Point& z = p.second;
  if (a1.contains(x, tol) && a1.contains(z, tol)) return true;
  if (a2.contains(x, tol) && a2.contains(z, tol)) return true;
  if (both.contains(x, tol) && span.contains(z, tol)) return true;
  if (span.contains(x, tol) && both.contains(z, tol)) return true;
  return false;
}

LatticeGrid TwoCartesianHull::rasterize(const GridGeometry& geom,
                                        Exec exec) const {
  geom.validate();
  if (geom.m != a1.m) {
    throw DimensionError("hull and grid dimensions differ");
  }
  LatticeGrid g = setcore::empty_grid(geom);
  par_for(geom.cell_count(), exec, [&](std::size_t f) {
    if (member(geom.cell_center(f))) g.occ[f] = 1;
  });
  return g;
}

TwoCartesianHull two_cartesian_hull(const ConvexSet& a1, const ConvexSet& a2,
                                    double tol) {
  if (a1.m != a2.m) {
    throw DimensionError("products have different dimension");
  }
  if (a1.empty() || a2.empty()) {
    throw PreconditionError("products must be nonempty");
  }
  TwoCartesianHull h;
  h.a1 = a1;
  h.a2 = a2;
  h.tol = tol;
  h.both = setcore::convex_intersection(a1, a2, tol);
  if (h.both.empty()) {
    throw PreconditionError("products must intersect");
  }
  h.span = setcore::convex_union_hull(a1, a2);
  return h;
}

namespace {

// Marks the cells of the square Q_{alpha,beta} on a scalar grid exactly.
void mark_square_scalar(LatticeGrid& u, const Point& alpha,
                        const Point& beta) {
  const double lo = std::min(alpha[0], beta[0]);
  const double hi = std::max(alpha[0], beta[0]);
  const Axis& ax = u.geom.axes[0];
  const Axis& az = u.geom.axes[1];
  const double tol = hull_tol(u.geom);
  std::vector<int> xi, zi;
  for (int i = 0; i < ax.n; ++i) {
    const double c = ax.center(i);
    if (c >= lo - tol && c <= hi + tol) xi.push_back(i);
  }
  for (int j = 0; j < az.n; ++j) {
    const double c = az.center(j);
    if (c >= lo - tol && c <= hi + tol) zi.push_back(j);
  }
  for (int i : xi) {
    for (int j : zi) {
      u.occ[static_cast<std::size_t>(i) * static_cast<std::size_t>(az.n) +
            static_cast<std::size_t>(j)] = 1;
    }
  }
}

// Marks sampled points of Q_{alpha,beta} on a fixed 17x17 parameter grid.
void mark_square_sampled(LatticeGrid& u, const Point& alpha,
                         const Point& beta) {
  constexpr int kSamples = 17;
  std::vector<int> idx;
  for (int si = 0; si < kSamples; ++si) {
    const double s = static_cast<double>(si) / (kSamples - 1);
    const Point x = setcore::lin_comb(s, alpha, beta);
    for (int ti = 0; ti < kSamples; ++ti) {
      const double t = static_cast<double>(ti) / (kSamples - 1);
      const Point z = setcore::lin_comb(t, alpha, beta);
      if (u.geom.locate({x, z}, idx)) {
        u.occ[u.geom.flat(idx)] = 1;
      }
    }
  }
}

// True when some cell within the one-cell neighbourhood of `f` (Chebyshev
// distance 1, clipped to the grid) is occupied in `g`.
bool near_occupied(const LatticeGrid& g, std::size_t f) {
  const std::vector<int> idx = g.geom.unflat(f);
  const std::size_t dims = idx.size();
  std::size_t combos = 1;
  for (std::size_t k = 0; k < dims; ++k) combos *= 3;
  std::vector<int> probe(dims);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t rest = c;
    bool in_range = true;
    for (std::size_t k = 0; k < dims; ++k) {
      const int off = static_cast<int>(rest % 3) - 1;
      rest /= 3;
      probe[k] = idx[k] + off;
      if (probe[k] < 0 || probe[k] >= g.geom.axes[k].n) {
        in_range = false;
        break;
      }
    }
    if (in_range && g.occupied(g.geom.flat(probe))) return true;
  }
  return false;
}

}  // namespace

StructureReport structure_check(const LatticeGrid& k, Exec exec) {
  k.validate();
  StructureReport rep;
  const LatticeGrid h0 = setcore::hat(k, exec);
  rep.cells_checked = k.geom.cell_count();
  if (h0.empty()) return rep;  // vacuously true

  const HullResult hr = sc_hull_grid(h0, exec);
  const LatticeGrid hh = setcore::hat(hr.hull, exec);

  // Union of generator squares over the occupied cells of hat(K).
  LatticeGrid u = setcore::empty_grid(k.geom);
  const std::size_t n = k.geom.cell_count();
  for (std::size_t f = 0; f < n; ++f) {
    if (!h0.occ[f]) continue;
    const PairPoint c = k.geom.cell_center(f);
    if (k.geom.m == 1) {
      mark_square_scalar(u, c.first, c.second);
    } else {
      mark_square_sampled(u, c.first, c.second);
    }
  }

  // Cellwise comparison up to a one-cell dilation both ways.
  for (std::size_t f = 0; f < n; ++f) {
    const bool a = hh.occupied(f);
    const bool b = u.occupied(f);
    if (a == b) continue;
    const LatticeGrid& other = a ? u : hh;
    if (!near_occupied(other, f)) rep.cell_mismatches.push_back(f);
  }

  // Every maximal Cartesian base of the hull must be covered by the union.
  const cartesian::CartesianFamily fam =
      cartesian::maximal_cartesian(setcore::SetHandle(hr.hull));
  std::vector<int> idx;
  for (std::size_t b = 0; b < fam.bases.size(); ++b) {
    bool covered = true;
    for (const Point& x : fam.bases[b]) {
      for (const Point& z : fam.bases[b]) {
        if (!k.geom.locate({x, z}, idx)) {
          covered = false;
          break;
        }
        const std::size_t f = k.geom.flat(idx);
        if (!u.occupied(f) && !near_occupied(u, f)) {
          covered = false;
          break;
        }
      }
      if (!covered) break;
    }
    if (!covered) rep.uncovered_bases.push_back(b);
  }

  rep.ok = rep.cell_mismatches.empty() && rep.uncovered_bases.empty();
  return rep;
}

NestedCheckResult nested_intersection_check(
    const std::vector<FinitePairSet>& chain, const GridGeometry& probe) {
  probe.validate();
  if (chain.empty()) {
    throw PreconditionError("nested check requires a nonempty chain");
  }
  std::vector<BoxUnion> hulls;
  hulls.reserve(chain.size());
  for (const FinitePairSet& k : chain) hulls.push_back(sc_hull_boxes(k));

  FinitePairSet inter{chain.front().m, chain.front().tol, {}};
  for (const PairPoint& p : chain.front().points) {
    bool in_all = true;
    for (std::size_t j = 1; j < chain.size(); ++j) {
      if (!chain[j].contains(p)) {
        in_all = false;
        break;
      }
    }
    if (in_all) inter.points.push_back(p);
  }
  inter.normalize();
  const BoxUnion hull_inter = sc_hull_boxes(inter);

  NestedCheckResult res;
  res.probes = probe.cell_count();
  for (std::size_t f = 0; f < res.probes; ++f) {
    const PairPoint p = probe.cell_center(f);
    bool lhs = true;
    for (const BoxUnion& h : hulls) {
      if (!h.contains(p)) {
        lhs = false;
        break;
      }
    }
    const bool rhs = hull_inter.contains(p);
    if (lhs != rhs) ++res.mismatches;
  }
  res.equal = res.mismatches == 0;
  return res;
}

}  // namespace nlsup::hulls
