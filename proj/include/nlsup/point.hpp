#pragma once

#include <vector>

#include "nlsup/errors.hpp"

namespace nlsup::setcore {

// Point in R^m. Coordinates must be finite.
using Point = std::vector<double>;

bool is_finite(const Point& p);
void validate_point(const Point& p, int m);

double dist2(const Point& a, const Point& b);
double dist(const Point& a, const Point& b);
double norm2(const Point& p);
double norm_inf(const Point& p);

// Componentwise max-norm comparison within tol.
bool approx_eq(const Point& a, const Point& b, double tol);

// Lexicographic order; used for canonical sorting.
bool lex_less(const Point& a, const Point& b);

Point lin_comb(double t, const Point& a, const Point& b);  // t*a + (1-t)*b

// Ordered pair (xi, zeta) in R^m x R^m.
struct PairPoint {
  Point first;
  Point second;
};

PairPoint pp(double xi, double zeta);                          // m = 1
PairPoint pp2(double x1, double x2, double z1, double z2);     // m = 2
PairPoint pp(const Point& xi, const Point& zeta);              // any m
bool approx_eq(const PairPoint& a, const PairPoint& b, double tol);
bool lex_less(const PairPoint& a, const PairPoint& b);
void validate_pair(const PairPoint& p, int m);

}  // namespace nlsup::setcore
