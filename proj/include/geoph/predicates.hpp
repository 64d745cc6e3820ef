#pragma once

#include "geoph/geometry.hpp"

namespace geoph {

/// Sign of the orientation determinant: +1 when a, b, c turn counter-clockwise,
/// -1 clockwise, 0 collinear. Exact: near-zero determinants are re-evaluated in
/// rational arithmetic.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// +1 when d lies strictly inside the circle through a, b, c (which must be
/// counter-clockwise), -1 strictly outside, 0 on it. The floating determinant
/// is trusted only when it clears both `tolerance` and a forward error bound;
/// otherwise the exact rational determinant decides.
int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
             double tolerance = 1e-12);

/// Exact sign of |p - center|^2 - r^2 where the circle has diameter ab:
/// +1 outside, 0 on, -1 strictly inside.
int diametral_side(const Point2& a, const Point2& b, const Point2& p);

Point2 circumcenter(const Point2& a, const Point2& b, const Point2& c);
double circumradius(const Point2& a, const Point2& b, const Point2& c);

}  // namespace geoph
