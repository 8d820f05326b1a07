#include "nlsup/cartesian.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace nlsup::cartesian {

using setcore::BoxUnion;
using setcore::FinitePairSet;
using setcore::LatticeGrid;
using setcore::PairPoint;
using setcore::Point;
using setcore::SetHandle;

namespace {

// Small fixed-capacity bitset used by the clique search.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const {
    return (w[i >> 6] >> (i & 63)) & std::uint64_t{1};
  }
  bool any() const {
    return std::any_of(w.begin(), w.end(), [](auto x) { return x != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  Bits and_with(const Bits& o) const {
    Bits r;
    r.w.resize(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::uint64_t x = w[k];
      while (x) {
        const int b = std::countr_zero(x);
        f(k * 64 + static_cast<std::size_t>(b));
        x &= x - 1;
      }
    }
  }
};

struct CliqueGraph {
  int m = 1;
  std::vector<Point> verts;  // lexicographically sorted diagonal points
  std::vector<Bits> adj;     // no self-loops
};

CliqueGraph graph_from_finite(const FinitePairSet& e) {
  CliqueGraph g;
  g.m = e.m;
  std::vector<Point> cand;
  for (const PairPoint& p : e.points) {
    cand.push_back(p.first);
    cand.push_back(p.second);
  }
  // Dedup under tol, keep only diagonal points.
  for (Point& v : cand) {
    if (!e.contains({v, v})) continue;
    bool seen = false;
    for (const Point& q : g.verts) {
      if (setcore::approx_eq(v, q, e.tol)) {
        seen = true;
        break;
      }
    }
    if (!seen) g.verts.push_back(std::move(v));
  }
  std::sort(g.verts.begin(), g.verts.end(),
            [](const Point& a, const Point& b) {
              return setcore::lex_less(a, b);
            });
  const std::size_t n = g.verts.size();
  g.adj.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (e.contains({g.verts[i], g.verts[j]}) &&
          e.contains({g.verts[j], g.verts[i]})) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
    }
  }
  return g;
}

CliqueGraph graph_from_grid(const LatticeGrid& e) {
  if (!e.geom.square()) {
    throw PreconditionError(
        "clique enumeration on grids requires a square geometry");
  }
  CliqueGraph g;
  const int m = e.geom.m;
  g.m = m;
  std::size_t block = 1;
  for (int k = 0; k < m; ++k) {
    block *= static_cast<std::size_t>(e.geom.axes[k].n);
  }
  // Occupied diagonal cells become vertices.
  std::vector<std::size_t> vert_cells;
  std::vector<int> bidx(static_cast<std::size_t>(m), 0);
  std::vector<int> idx(2 * static_cast<std::size_t>(m));
  std::vector<setcore::Axis> block_axes(e.geom.axes.begin(),
                                        e.geom.axes.begin() + m);
  for (std::size_t d = 0; d < block; ++d) {
    for (int k = 0; k < m; ++k) {
      idx[k] = bidx[k];
      idx[m + k] = bidx[k];
    }
    if (e.occupied(e.geom.flat(idx))) {
      vert_cells.push_back(d);
      Point v(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) v[k] = block_axes[k].center(bidx[k]);
      g.verts.push_back(std::move(v));
      if (g.verts.size() > kMaxCliqueVertices) {
        throw PreconditionError(
            "too many occupied diagonal cells for clique enumeration");
      }
    }
    for (std::size_t k = bidx.size(); k-- > 0;) {
      if (++bidx[k] < block_axes[k].n) break;
      bidx[k] = 0;
    }
  }
  // Vertices are generated in row-major order, which is lexicographic in the
  // cell centres; no re-sorting is needed.
  const std::size_t n = g.verts.size();
  g.adj.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t fij = vert_cells[i] * block + vert_cells[j];
      const std::size_t fji = vert_cells[j] * block + vert_cells[i];
      if (e.occupied(fij) && e.occupied(fji)) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
    }
  }
  return g;
}

CliqueGraph build_graph(const SetHandle& e) {
  if (const auto* s = std::get_if<FinitePairSet>(&e)) {
    return graph_from_finite(*s);
  }
  if (const auto* s = std::get_if<LatticeGrid>(&e)) {
    return graph_from_grid(*s);
  }
  throw PreconditionError(
      "clique enumeration requires a finite or grid set");
}

// Pivoting Bron–Kerbosch; vertices are visited in ascending (lexicographic)
// order, so the emitted clique list is deterministic.
void bron_kerbosch(const CliqueGraph& g, std::vector<std::size_t>& r, Bits p,
                   Bits x, std::vector<std::vector<std::size_t>>& out) {
  if (!p.any() && !x.any()) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of P u X with the most neighbours in P (ties: smallest).
  std::size_t pivot = 0, best = 0;
  bool have = false;
  auto consider = [&](std::size_t u) {
    const std::size_t deg = p.and_with(g.adj[u]).count();
    if (!have || deg > best) {
      have = true;
      best = deg;
      pivot = u;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  std::vector<std::size_t> order;
  p.for_each([&](std::size_t v) {
    if (!g.adj[pivot].test(v)) order.push_back(v);
  });
  for (std::size_t v : order) {
    r.push_back(v);
    bron_kerbosch(g, r, p.and_with(g.adj[v]), x.and_with(g.adj[v]), out);
    r.pop_back();
    p.w[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    x.set(v);
  }
}

}  // namespace

CartesianFamily maximal_cartesian(const SetHandle& e) {
  const CliqueGraph g = build_graph(e);
  CartesianFamily fam;
  fam.m = g.m;
  const std::size_t n = g.verts.size();
  if (n == 0) return fam;
  Bits p(n), x(n);
  for (std::size_t i = 0; i < n; ++i) p.set(i);
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> r;
  bron_kerbosch(g, r, p, x, cliques);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  fam.bases.reserve(cliques.size());
  for (const auto& c : cliques) {
    std::vector<Point> base;
    base.reserve(c.size());
    for (std::size_t v : c) base.push_back(g.verts[v]);
    fam.bases.push_back(std::move(base));
  }
  return fam;
}

SetHandle hat_via_cliques(const SetHandle& e) {
  const CartesianFamily fam = maximal_cartesian(e);
  if (const auto* s = std::get_if<FinitePairSet>(&e)) {
    FinitePairSet out{s->m, s->tol, {}};
    for (const auto& base : fam.bases) {
      for (const Point& a : base) {
        for (const Point& b : base) {
          out.add({a, b});
        }
      }
    }
    out.normalize();
    return out;
  }
  const auto& g = std::get<LatticeGrid>(e);
  LatticeGrid out = setcore::empty_grid(g.geom);
  std::vector<int> idx;
  for (const auto& base : fam.bases) {
    for (const Point& a : base) {
      for (const Point& b : base) {
        if (g.geom.locate({a, b}, idx)) {
          out.occ[g.geom.flat(idx)] = 1;
        }
      }
    }
  }
  return out;
}

bool inclusion_feasible(const SetHandle& e) {
  if (const auto* s = std::get_if<BoxUnion>(&e)) return !s->empty();
  return !setcore::set_empty(setcore::hat(e));
}

}  // namespace nlsup::cartesian
