#include "nlsup/set_ops.hpp"

#include <algorithm>
#include <cmath>

#include "nlsup/geometry.hpp"

namespace nlsup::setcore {

namespace {

// In-place odometer increment of a row-major multi-index.
void advance(std::vector<int>& idx, const std::vector<Axis>& axes) {
  for (std::size_t k = idx.size(); k-- > 0;) {
    if (++idx[k] < axes[k].n) return;
    idx[k] = 0;
  }
}

std::vector<int> swapped_blocks(const std::vector<int>& idx, int m) {
  std::vector<int> out(idx.size());
  for (int k = 0; k < m; ++k) {
    out[k] = idx[m + k];
    out[m + k] = idx[k];
  }
  return out;
}

// Occupancy lookup of an arbitrary pair via cell-centre rounding.
bool lookup(const LatticeGrid& g, const PairPoint& p, std::vector<int>& tmp) {
  if (!g.geom.locate(p, tmp)) return false;
  return g.occupied(g.geom.flat(tmp));
}

}  // namespace

int dim(const SetHandle& s) {
  if (const auto* e = std::get_if<FinitePairSet>(&s)) return e->m;
  if (const auto* e = std::get_if<BoxUnion>(&s)) return e->m;
  return std::get<LatticeGrid>(s).geom.m;
}

bool set_empty(const SetHandle& s) {
  return std::visit([](const auto& e) { return e.empty(); }, s);
}

bool member(const SetHandle& s, const PairPoint& p) {
  if (const auto* e = std::get_if<FinitePairSet>(&s)) return e->contains(p);
  if (const auto* e = std::get_if<BoxUnion>(&s)) return e->contains(p);
  const auto& g = std::get<LatticeGrid>(s);
  std::vector<int> tmp;
  return lookup(g, p, tmp);
}

// ---- transpose -----------------------------------------------------------

FinitePairSet transpose(const FinitePairSet& e) {
  FinitePairSet out{e.m, e.tol, {}};
  out.points.reserve(e.points.size());
  for (const PairPoint& p : e.points) out.points.push_back({p.second, p.first});
  out.normalize();
  return out;
}

LatticeGrid transpose(const LatticeGrid& e) {
  GridGeometry geom = e.geom;
  for (int k = 0; k < e.geom.m; ++k) {
    std::swap(geom.axes[k], geom.axes[e.geom.m + k]);
  }
  LatticeGrid out = empty_grid(geom);
  std::vector<int> idx(geom.axes.size(), 0);
  const std::size_t n = geom.cell_count();
  for (std::size_t f = 0; f < n; ++f) {
    out.occ[f] = e.occ[e.geom.flat(swapped_blocks(idx, geom.m))];
    advance(idx, geom.axes);
  }
  return out;
}

BoxUnion transpose(const BoxUnion& e) { return e; }

SetHandle transpose(const SetHandle& e) {
  return std::visit([](const auto& s) { return SetHandle(transpose(s)); }, e);
}

// ---- symmetrize ----------------------------------------------------------

FinitePairSet symmetrize(const FinitePairSet& e) {
  FinitePairSet out{e.m, e.tol, {}};
  for (const PairPoint& p : e.points) {
    if (e.contains({p.second, p.first})) out.points.push_back(p);
  }
  out.normalize();
  return out;
}

LatticeGrid symmetrize(const LatticeGrid& e) {
  LatticeGrid out = empty_grid(e.geom);
  const int m = e.geom.m;
  std::vector<int> idx(e.geom.axes.size(), 0);
  std::vector<int> tmp;
  const bool sq = e.geom.square();
  const std::size_t n = e.geom.cell_count();
  for (std::size_t f = 0; f < n; ++f) {
    if (e.occ[f]) {
      bool mirror;
      if (sq) {
        mirror = e.occupied(e.geom.flat(swapped_blocks(idx, m)));
      } else {
        const PairPoint c = e.geom.cell_center(idx);
        mirror = lookup(e, {c.second, c.first}, tmp);
      }
      out.occ[f] = mirror ? 1 : 0;
    }
    advance(idx, e.geom.axes);
  }
  return out;
}

BoxUnion symmetrize(const BoxUnion& e) { return e; }

SetHandle symmetrize(const SetHandle& e) {
  return std::visit([](const auto& s) { return SetHandle(symmetrize(s)); }, e);
}

// ---- diagonalize ---------------------------------------------------------

namespace {

bool diag_member_finite(const FinitePairSet& e, const Point& a) {
  return e.contains({a, a});
}

// (alpha, alpha) occupancy for the first-block index of a square grid.
bool diag_occupied(const LatticeGrid& g, const std::vector<int>& block,
                   bool first_block, std::vector<int>& tmp) {
  const int m = g.geom.m;
  if (g.geom.square()) {
    std::vector<int> idx(2 * static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      const int i = first_block ? block[k] : block[m + k];
      idx[k] = i;
      idx[m + k] = i;
    }
    return g.occupied(g.geom.flat(idx));
  }
  PairPoint c = g.geom.cell_center(block);
  const Point& a = first_block ? c.first : c.second;
  return lookup(g, {a, a}, tmp);
}

}  // namespace

FinitePairSet diagonalize(const FinitePairSet& e) {
  FinitePairSet out{e.m, e.tol, {}};
  for (const PairPoint& p : e.points) {
    if (diag_member_finite(e, p.first) && diag_member_finite(e, p.second)) {
      out.points.push_back(p);
    }
  }
  out.normalize();
  return out;
}

LatticeGrid diagonalize(const LatticeGrid& e) {
  LatticeGrid out = empty_grid(e.geom);
  std::vector<int> idx(e.geom.axes.size(), 0);
  std::vector<int> tmp;
  const std::size_t n = e.geom.cell_count();
  for (std::size_t f = 0; f < n; ++f) {
    if (e.occ[f] && diag_occupied(e, idx, true, tmp) &&
        diag_occupied(e, idx, false, tmp)) {
      out.occ[f] = 1;
    }
    advance(idx, e.geom.axes);
  }
  return out;
}

BoxUnion diagonalize(const BoxUnion& e) { return e; }

SetHandle diagonalize(const SetHandle& e) {
  return std::visit([](const auto& s) { return SetHandle(diagonalize(s)); },
                    e);
}

// ---- hat -----------------------------------------------------------------

FinitePairSet hat(const FinitePairSet& e) {
  FinitePairSet out{e.m, e.tol, {}};
  for (const PairPoint& p : e.points) {
    if (e.contains({p.second, p.first}) && diag_member_finite(e, p.first) &&
        diag_member_finite(e, p.second)) {
      out.points.push_back(p);
    }
  }
  out.normalize();
  return out;
}

LatticeGrid hat(const LatticeGrid& e, Exec exec) {
  LatticeGrid out = empty_grid(e.geom);
  const int m = e.geom.m;
  const bool sq = e.geom.square();
  const std::size_t n = e.geom.cell_count();
  par_for(n, exec, [&](std::size_t f) {
    if (!e.occ[f]) return;
    std::vector<int> idx = e.geom.unflat(f);
    std::vector<int> tmp;
    bool mirror;
    if (sq) {
      mirror = e.occupied(e.geom.flat(swapped_blocks(idx, m)));
    } else {
      const PairPoint c = e.geom.cell_center(idx);
      mirror = lookup(e, {c.second, c.first}, tmp);
    }
    if (mirror && diag_occupied(e, idx, true, tmp) &&
        diag_occupied(e, idx, false, tmp)) {
      out.occ[f] = 1;
    }
  });
  return out;
}

BoxUnion hat(const BoxUnion& e) { return e; }

SetHandle hat(const SetHandle& e) {
  if (const auto* s = std::get_if<FinitePairSet>(&e)) return hat(*s);
  if (const auto* s = std::get_if<BoxUnion>(&e)) return hat(*s);
  return hat(std::get<LatticeGrid>(e));
}

LatticeGrid hat_via_complement(const LatticeGrid& e) {
  if (!e.geom.square()) {
    throw PreconditionError(
        "complement construction requires a square grid geometry");
  }
  const int m = e.geom.m;
  // Diagonal gaps: first-block indices whose diagonal cell is unoccupied.
  std::size_t diag_cells = 1;
  for (int k = 0; k < m; ++k) {
    diag_cells *= static_cast<std::size_t>(e.geom.axes[k].n);
  }
  std::vector<std::uint8_t> good(diag_cells, 0);
  {
    std::vector<int> block(static_cast<std::size_t>(m), 0);
    std::vector<Axis> block_axes(e.geom.axes.begin(), e.geom.axes.begin() + m);
    std::vector<int> idx(2 * static_cast<std::size_t>(m));
    for (std::size_t d = 0; d < diag_cells; ++d) {
      for (int k = 0; k < m; ++k) {
        idx[k] = block[k];
        idx[m + k] = block[k];
      }
      good[d] = e.occupied(e.geom.flat(idx)) ? 1 : 0;
      advance(block, block_axes);
    }
  }
  LatticeGrid sym = symmetrize(e);
  LatticeGrid out = empty_grid(e.geom);
  std::vector<int> idx(e.geom.axes.size(), 0);
  const std::size_t n = e.geom.cell_count();
  for (std::size_t f = 0; f < n; ++f) {
    if (sym.occ[f]) {
      std::size_t dfirst = 0, dsecond = 0;
      for (int k = 0; k < m; ++k) {
        dfirst = dfirst * static_cast<std::size_t>(e.geom.axes[k].n) +
                 static_cast<std::size_t>(idx[k]);
        dsecond = dsecond * static_cast<std::size_t>(e.geom.axes[k].n) +
                  static_cast<std::size_t>(idx[m + k]);
      }
      if (good[dfirst] && good[dsecond]) out.occ[f] = 1;
    }
    advance(idx, e.geom.axes);
  }
  return out;
}

// ---- projections / sections ----------------------------------------------

namespace {

std::vector<Point> dedup_sorted(std::vector<Point> pts, double tol) {
  std::vector<Point> out;
  for (Point& p : pts) {
    bool seen = false;
    for (const Point& q : out) {
      if (approx_eq(p, q, tol)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(),
            [](const Point& a, const Point& b) { return lex_less(a, b); });
  return out;
}

}  // namespace

std::vector<Point> projection(const SetHandle& s, int which) {
  if (which != 1 && which != 2) {
    throw PreconditionError("projection component must be 1 or 2");
  }
  if (const auto* e = std::get_if<FinitePairSet>(&s)) {
    std::vector<Point> pts;
    pts.reserve(e->points.size());
    for (const PairPoint& p : e->points) {
      pts.push_back(which == 1 ? p.first : p.second);
    }
    return dedup_sorted(std::move(pts), e->tol);
  }
  if (const auto* g = std::get_if<LatticeGrid>(&s)) {
    std::vector<Point> pts;
    std::vector<int> idx(g->geom.axes.size(), 0);
    const std::size_t n = g->geom.cell_count();
    for (std::size_t f = 0; f < n; ++f) {
      if (g->occ[f]) {
        const PairPoint c = g->geom.cell_center(idx);
        pts.push_back(which == 1 ? c.first : c.second);
      }
      advance(idx, g->geom.axes);
    }
    return dedup_sorted(std::move(pts), kDefaultTol);
  }
  throw PreconditionError("projection requires a finite or grid set");
}

std::vector<Point> section(const SetHandle& s, const Point& beta) {
  if (const auto* e = std::get_if<FinitePairSet>(&s)) {
    validate_point(beta, e->m);
    std::vector<Point> pts;
    for (const PairPoint& p : e->points) {
      if (approx_eq(p.second, beta, e->tol)) pts.push_back(p.first);
    }
    return dedup_sorted(std::move(pts), e->tol);
  }
  if (const auto* g = std::get_if<LatticeGrid>(&s)) {
    validate_point(beta, g->geom.m);
    const int m = g->geom.m;
    std::vector<int> slice(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      const int i = g->geom.axes[m + k].locate(beta[k]);
      if (i < 0) return {};
      slice[k] = i;
    }
    std::vector<Point> pts;
    std::vector<int> idx(g->geom.axes.size(), 0);
    const std::size_t n = g->geom.cell_count();
    for (std::size_t f = 0; f < n; ++f) {
      bool in_slice = true;
      for (int k = 0; k < m; ++k) {
        if (idx[m + k] != slice[k]) {
          in_slice = false;
          break;
        }
      }
      if (in_slice && g->occ[f]) {
        pts.push_back(g->geom.cell_center(idx).first);
      }
      advance(idx, g->geom.axes);
    }
    return dedup_sorted(std::move(pts), kDefaultTol);
  }
  throw PreconditionError("section requires a finite or grid set");
}

// ---- point clouds / Hausdorff ---------------------------------------------

std::vector<Point> point_cloud(const SetHandle& s) {
  std::vector<Point> cloud;
  if (const auto* e = std::get_if<FinitePairSet>(&s)) {
    for (const PairPoint& p : e->points) {
      Point q = p.first;
      q.insert(q.end(), p.second.begin(), p.second.end());
      cloud.push_back(std::move(q));
    }
    return cloud;
  }
  if (const auto* g = std::get_if<LatticeGrid>(&s)) {
    std::vector<int> idx(g->geom.axes.size(), 0);
    const std::size_t n = g->geom.cell_count();
    for (std::size_t f = 0; f < n; ++f) {
      if (g->occ[f]) {
        const PairPoint c = g->geom.cell_center(idx);
        Point q = c.first;
        q.insert(q.end(), c.second.begin(), c.second.end());
        cloud.push_back(std::move(q));
      }
      advance(idx, g->geom.axes);
    }
    return cloud;
  }
  throw PreconditionError("point cloud requires a finite or grid set");
}

double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.empty() || b.empty()) {
    throw PreconditionError("Hausdorff distance requires nonempty sets");
  }
  auto one_sided = [](const std::vector<Point>& from,
                      const std::vector<Point>& to) {
    double worst = 0.0;
    for (const Point& p : from) {
      double best = dist2(p, to.front());
      for (const Point& q : to) best = std::min(best, dist2(p, q));
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return one_sided(a, b) + one_sided(b, a);
}

double hausdorff(const SetHandle& a, const SetHandle& b) {
  return hausdorff(point_cloud(a), point_cloud(b));
}

// ---- rasterization ---------------------------------------------------------

LatticeGrid rasterize(const FinitePairSet& e, const GridGeometry& geom) {
  geom.validate();
  if (e.m != geom.m) {
    throw DimensionError("set and grid dimensions differ");
  }
  std::vector<int> tmp;
  for (const PairPoint& p : e.points) {
    if (!geom.locate(p, tmp)) {
      throw DimensionError("finite set extends beyond the grid ranges");
    }
  }
  LatticeGrid g = empty_grid(geom);
  const double reach = geom.half_cell_diag() * (1.0 + 1e-12);
  std::vector<int> idx(geom.axes.size(), 0);
  const std::size_t n = geom.cell_count();
  for (std::size_t f = 0; f < n; ++f) {
    const PairPoint c = geom.cell_center(idx);
    Point q = c.first;
    q.insert(q.end(), c.second.begin(), c.second.end());
    for (const PairPoint& p : e.points) {
      Point r = p.first;
      r.insert(r.end(), p.second.begin(), p.second.end());
      if (dist(q, r) <= reach) {
        g.occ[f] = 1;
        break;
      }
    }
    advance(idx, geom.axes);
  }
  return g;
}

LatticeGrid rasterize(const BoxUnion& e, const GridGeometry& geom, Exec exec) {
  geom.validate();
  if (e.m != geom.m) {
    throw DimensionError("set and grid dimensions differ");
  }
  std::vector<int> tmp;
  for (const PairPoint& g : e.generators) {
    if (!geom.locate(g, tmp)) {
      throw DimensionError("box union extends beyond the grid ranges");
    }
  }
  LatticeGrid g = empty_grid(geom);
  const std::size_t n = geom.cell_count();
  par_for(n, exec, [&](std::size_t f) {
    if (e.contains(geom.cell_center(f))) g.occ[f] = 1;
  });
  return g;
}

LatticeGrid rasterize(const SetHandle& e, const GridGeometry& geom) {
  if (const auto* s = std::get_if<FinitePairSet>(&e)) {
    return rasterize(*s, geom);
  }
  if (const auto* s = std::get_if<BoxUnion>(&e)) return rasterize(*s, geom);
  throw PreconditionError("grids do not rasterize; resample instead");
}

}  // namespace nlsup::setcore
