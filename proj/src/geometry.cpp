#include "nlsup/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace nlsup::setcore {

namespace {

double cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool p2_less(const P2& a, const P2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

bool p2_eq(const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }

double dist_point_segment2d(P2 p, P2 a, P2 b) {
  const double vx = a.x - b.x, vy = a.y - b.y;
  const double len2 = vx * vx + vy * vy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = ((p.x - b.x) * vx + (p.y - b.y) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
  }
  const double qx = b.x + t * vx, qy = b.y + t * vy;
  return std::hypot(p.x - qx, p.y - qy);
}

}  // namespace

std::vector<P2> hull2d(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), p2_less);
  pts.erase(std::unique(pts.begin(), pts.end(), p2_eq), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<P2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);  // last point repeats the first
  return h;
}

bool in_hull2d(const std::vector<P2>& poly, P2 p, double tol) {
  if (poly.empty()) return false;
  if (poly.size() == 1) {
    return std::hypot(p.x - poly[0].x, p.y - poly[0].y) <= tol;
  }
  if (poly.size() == 2) {
    return dist_point_segment2d(p, poly[0], poly[1]) <= tol;
  }
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& a = poly[i];
    const P2& b = poly[(i + 1) % poly.size()];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    if (len == 0.0) continue;
    // Signed distance to the edge; inside is non-negative for ccw polygons.
    if (cross(a, b, p) / len < -tol) return false;
  }
  return true;
}

double segment_parameter(const Point& p, const Point& a, const Point& b) {
  const double len2 = dist2(a, b);
  if (len2 == 0.0) return 1.0;
  double t = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    t += (p[k] - b[k]) * (a[k] - b[k]);
  }
  return std::clamp(t / len2, 0.0, 1.0);
}

double dist_to_segment(const Point& p, const Point& a, const Point& b) {
  const double t = segment_parameter(p, a, b);
  return dist(p, lin_comb(t, a, b));
}

bool on_segment(const Point& p, const Point& a, const Point& b, double tol) {
  return dist_to_segment(p, a, b) <= tol;
}

bool ConvexSet::contains(const Point& p, double tol) const {
  if (pts.empty()) return false;
  if (m == 1) {
    double lo = pts.front()[0], hi = lo;
    for (const Point& q : pts) {
      lo = std::min(lo, q[0]);
      hi = std::max(hi, q[0]);
    }
    return p[0] >= lo - tol && p[0] <= hi + tol;
  }
  std::vector<P2> raw(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) raw[i] = {pts[i][0], pts[i][1]};
  return in_hull2d(hull2d(raw), {p[0], p[1]}, tol);
}

ConvexSet ConvexSet::interval(double lo, double hi) {
  return {1, {{lo}, {hi}}};
}

ConvexSet ConvexSet::box2(double lo1, double hi1, double lo2, double hi2) {
  return {2, {{lo1, lo2}, {hi1, lo2}, {hi1, hi2}, {lo1, hi2}}};
}

ConvexSet ConvexSet::from_points(int m, std::vector<Point> pts) {
  for (const Point& p : pts) validate_point(p, m);
  return {m, std::move(pts)};
}

namespace {

// Sutherland–Hodgman clip of a ccw polygon by the halfplane left of (a, b).
std::vector<P2> clip_halfplane(const std::vector<P2>& poly, P2 a, P2 b,
                               double tol) {
  std::vector<P2> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P2& p = poly[i];
    const P2& q = poly[(i + 1) % n];
    const double dp = cross(a, b, p);
    const double dq = cross(a, b, q);
    if (dp >= -tol) out.push_back(p);
    if ((dp > tol && dq < -tol) || (dp < -tol && dq > tol)) {
      const double t = dp / (dp - dq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

}  // namespace

ConvexSet convex_intersection(const ConvexSet& a, const ConvexSet& b,
                              double tol) {
  if (a.m != b.m) throw DimensionError("convex sets have different dimension");
  if (a.empty() || b.empty()) return {a.m, {}};
  if (a.m == 1) {
    double alo = a.pts.front()[0], ahi = alo;
    for (const Point& p : a.pts) {
      alo = std::min(alo, p[0]);
      ahi = std::max(ahi, p[0]);
    }
    double blo = b.pts.front()[0], bhi = blo;
    for (const Point& p : b.pts) {
      blo = std::min(blo, p[0]);
      bhi = std::max(bhi, p[0]);
    }
    const double lo = std::max(alo, blo), hi = std::min(ahi, bhi);
    if (lo > hi + tol) return {1, {}};
    return ConvexSet::interval(lo, std::max(lo, hi));
  }
  std::vector<P2> pa(a.pts.size()), pb(b.pts.size());
  for (std::size_t i = 0; i < a.pts.size(); ++i)
    pa[i] = {a.pts[i][0], a.pts[i][1]};
  for (std::size_t i = 0; i < b.pts.size(); ++i)
    pb[i] = {b.pts[i][0], b.pts[i][1]};
  std::vector<P2> poly = hull2d(pa);
  const std::vector<P2> clip = hull2d(pb);
  if (clip.size() == 1) {
    return in_hull2d(poly, clip[0], tol)
               ? ConvexSet{2, {{clip[0].x, clip[0].y}}}
               : ConvexSet{2, {}};
  }
  if (clip.size() == 2 || poly.size() <= 2) {
    // Degenerate clip regions: fall back to the points of either hull that
    // lie in both regions (sufficient for the box/polygon inputs used here).
    std::vector<P2> keep;
    for (const P2& p : poly) {
      if (in_hull2d(clip, p, tol)) keep.push_back(p);
    }
    for (const P2& p : clip) {
      if (in_hull2d(poly, p, tol)) keep.push_back(p);
    }
    ConvexSet out{2, {}};
    for (const P2& p : keep) out.pts.push_back({p.x, p.y});
    return out;
  }
  for (std::size_t i = 0; i < clip.size() && !poly.empty(); ++i) {
    poly = clip_halfplane(poly, clip[i], clip[(i + 1) % clip.size()], 0.0);
  }
  ConvexSet out{2, {}};
  for (const P2& p : poly) out.pts.push_back({p.x, p.y});
  return out;
}

ConvexSet convex_union_hull(const ConvexSet& a, const ConvexSet& b) {
  if (a.m != b.m) throw DimensionError("convex sets have different dimension");
  ConvexSet out{a.m, a.pts};
  out.pts.insert(out.pts.end(), b.pts.begin(), b.pts.end());
  return out;
}

}  // namespace nlsup::setcore
