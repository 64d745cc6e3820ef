#include "geoph/predicates.hpp"

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace geoph {
namespace {

using Rational = boost::multiprecision::cpp_rational;

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;
// Forward error bounds in the style of Shewchuk's adaptive predicates.
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;
constexpr double kDotBound = (4.0 + 32.0 * kEps) * kEps;

template <class T>
int sign_of(const T& v) {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

int orient_exact(const Point2& a, const Point2& b, const Point2& c) {
    Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

int incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    Rational dx(d.x), dy(d.y);
    Rational adx = Rational(a.x) - dx, ady = Rational(a.y) - dy;
    Rational bdx = Rational(b.x) - dx, bdy = Rational(b.y) - dy;
    Rational cdx = Rational(c.x) - dx, cdy = Rational(c.y) - dy;
    Rational alift = adx * adx + ady * ady;
    Rational blift = bdx * bdx + bdy * bdy;
    Rational clift = cdx * cdx + cdy * cdy;
    Rational det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                   clift * (adx * bdy - bdx * ady);
    return sign_of(det);
}

}  // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const double left = (b.x - a.x) * (c.y - a.y);
    const double right = (b.y - a.y) * (c.x - a.x);
    const double det = left - right;
    const double bound = kOrientBound * (std::abs(left) + std::abs(right));
    if (std::abs(det) > bound) return sign_of(det);
    return orient_exact(a, b, c);
}

int incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d, double tolerance) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det =
        alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    const double bound = std::max(tolerance, kIncircleBound * permanent);
    if (std::abs(det) > bound) return sign_of(det);
    return incircle_exact(a, b, c, d);
}

int diametral_side(const Point2& a, const Point2& b, const Point2& p) {
    const double l = (p.x - a.x) * (p.x - b.x);
    const double r = (p.y - a.y) * (p.y - b.y);
    const double dot = l + r;
    if (std::abs(dot) > kDotBound * (std::abs(l) + std::abs(r))) return sign_of(dot);
    Rational px(p.x), py(p.y);
    return sign_of((px - Rational(a.x)) * (px - Rational(b.x)) +
                   (py - Rational(a.y)) * (py - Rational(b.y)));
}

Point2 circumcenter(const Point2& a, const Point2& b, const Point2& c) {
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    return {a.x + (cy * b2 - by * c2) / d, a.y + (bx * c2 - cx * b2) / d};
}

double circumradius(const Point2& a, const Point2& b, const Point2& c) {
    const double ab = distance(a, b), bc = distance(b, c), ca = distance(c, a);
    const double twice_area = std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    return ab * bc * ca / (2.0 * twice_area);
}

}  // namespace geoph
