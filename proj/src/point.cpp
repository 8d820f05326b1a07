#include "nlsup/point.hpp"

#include <algorithm>
#include <cmath>

namespace nlsup::setcore {

bool is_finite(const Point& p) {
  return std::all_of(p.begin(), p.end(),
                     [](double x) { return std::isfinite(x); });
}

void validate_point(const Point& p, int m) {
  if (static_cast<int>(p.size()) != m) {
    throw DimensionError("point has dimension " + std::to_string(p.size()) +
                         ", expected " + std::to_string(m));
  }
  if (!is_finite(p)) throw ParseError("point has non-finite coordinates");
}

double dist2(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    s += d * d;
  }
  return s;
}

double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

double norm2(const Point& p) {
  double s = 0.0;
  for (double x : p) s += x * x;
  return std::sqrt(s);
}

double norm_inf(const Point& p) {
  double s = 0.0;
  for (double x : p) s = std::max(s, std::abs(x));
  return s;
}

bool approx_eq(const Point& a, const Point& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Point lin_comb(double t, const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = t * a[k] + (1.0 - t) * b[k];
  }
  return out;
}

PairPoint pp(double xi, double zeta) { return {{xi}, {zeta}}; }

PairPoint pp2(double x1, double x2, double z1, double z2) {
  return {{x1, x2}, {z1, z2}};
}

PairPoint pp(const Point& xi, const Point& zeta) { return {xi, zeta}; }

bool approx_eq(const PairPoint& a, const PairPoint& b, double tol) {
  return approx_eq(a.first, b.first, tol) &&
         approx_eq(a.second, b.second, tol);
}

bool lex_less(const PairPoint& a, const PairPoint& b) {
  if (a.first != b.first) return lex_less(a.first, b.first);
  return lex_less(a.second, b.second);
}

void validate_pair(const PairPoint& p, int m) {
  validate_point(p.first, m);
  validate_point(p.second, m);
}

}  // namespace nlsup::setcore
