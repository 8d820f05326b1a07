#include "nlsup/simple_function.hpp"

#include <algorithm>
#include <cmath>

#include "nlsup/errors.hpp"

namespace nlsup::functional {

using setcore::Point;

void SimpleFunction::validate(double tol) const {
  if (n != 1) throw PreconditionError("only interval domains are supported");
  if (m < 1) throw PreconditionError("value dimension must be positive");
  if (pieces.empty()) throw PreconditionError("simple function has no pieces");
  std::vector<const Piece*> order;
  order.reserve(pieces.size());
  for (const Piece& p : pieces) {
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !(p.a < p.b)) {
      throw PreconditionError("pieces must have positive length");
    }
    setcore::validate_point(p.value, m);
    order.push_back(&p);
  }
  std::sort(order.begin(), order.end(),
            [](const Piece* x, const Piece* y) { return x->a < y->a; });
  if (std::abs(order.front()->a) > tol ||
      std::abs(order.back()->b - 1.0) > tol) {
    throw PreconditionError("pieces must cover [0, 1]");
  }
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (std::abs(order[k]->a - order[k - 1]->b) > tol) {
      throw PreconditionError("pieces must tile [0, 1] without gaps");
    }
  }
}

void SimpleFunction::normalize() {
  validate();
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.a < y.a; });
  std::vector<Piece> merged;
  for (const Piece& p : pieces) {
    if (!merged.empty() &&
        setcore::approx_eq(merged.back().value, p.value, kDefaultTol)) {
      merged.back().b = p.b;
    } else {
      merged.push_back(p);
    }
  }
  pieces = std::move(merged);
}

const Point& SimpleFunction::value_at(double x) const {
  const Piece* right = nullptr;  // x at or past the right edge of a piece
  for (const Piece& p : pieces) {
    if (x >= p.a && x < p.b) return p.value;
    if (x >= p.b && (right == nullptr || p.b > right->b)) right = &p;
  }
  if (right != nullptr) return right->value;
  return pieces.front().value;
}

std::vector<Point> SimpleFunction::value_set(double tol) const {
  std::vector<Point> vals;
  for (const Piece& p : pieces) {
    bool seen = false;
    for (const Point& v : vals) {
      if (setcore::approx_eq(v, p.value, tol)) {
        seen = true;
        break;
      }
    }
    if (!seen) vals.push_back(p.value);
  }
  std::sort(vals.begin(), vals.end(), [](const Point& x, const Point& y) {
    return setcore::lex_less(x, y);
  });
  return vals;
}

SimpleFunction constant_function(const Point& v) {
  SimpleFunction f;
  f.m = static_cast<int>(v.size());
  f.pieces = {{0.0, 1.0, v}};
  f.validate();
  return f;
}

SimpleFunction make_simple(int m, std::vector<Piece> pieces) {
  SimpleFunction f;
  f.m = m;
  f.pieces = std::move(pieces);
  f.validate();
  return f;
}

}  // namespace nlsup::functional
