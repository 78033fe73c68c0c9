// Long Weierstrass equations over Q: c-invariants, admissible coordinate
// changes, and Laska's minimal-model reduction.
#pragma once

#include "mindisc/arith.hpp"

#include <vector>

namespace mindisc {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, integral coefficients.
struct WeierstrassEquation {
  Integer a1, a2, a3, a4, a6;
  bool operator==(const WeierstrassEquation&) const = default;
};

// c4^3 - c6^2 = 1728 delta; delta != 0 whenever produced by c_invariants.
struct CInvariants {
  Integer c4, c6, delta;
};

// x = u^2 x' + r,  y = u^3 y' + u^2 s x' + t  with u != 0.
struct Transformation {
  Integer u, r, s, t;
  static Transformation identity() { return {1, 0, 0, 0}; }
  bool operator==(const Transformation&) const = default;
};

// (c4^3 - c6^2)/1728; zero iff the curve is singular.
Integer discriminant(const WeierstrassEquation& e);

// Throws singular_curve_error when the discriminant vanishes.
CInvariants c_invariants(const WeierstrassEquation& e);

// Applies the coordinate change; throws (naming the offending coefficient)
// when the image is not integral.  delta scales by u^-12.
WeierstrassEquation transform(const WeierstrassEquation& e, const Transformation& t);

// transform(transform(e, first), then) == transform(e, compose(first, then)).
Transformation compose(const Transformation& first, const Transformation& then);

// All u > 0 with u^4 | c4 and u^6 | c6, ascending; a vanishing invariant's
// condition is replaced by u^12 | delta.
std::vector<Integer> step2_admissible_set(const CInvariants& c);

struct LaskaResult {
  WeierstrassEquation model;
  Transformation transformation;  // transform(input, transformation) == model
};

// Laska's algorithm: descend through the admissible scales, at each one scan
// the twelve normalized (a1', a2', a3') candidates, and accept the first for
// which the recovered a4', a6', s, r, t are all integral.
LaskaResult laska_minimize(const WeierstrassEquation& e);

}  // namespace mindisc
