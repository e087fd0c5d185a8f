#pragma once

// Exact sign predicates for double-precision 2D points.
//
// Each predicate first evaluates in plain floating point with a forward error
// bound; only when the result is too close to zero does it fall back to exact
// expansion arithmetic (sums of non-overlapping doubles).

#include <cmath>
#include <limits>
#include <vector>

namespace diampart {

struct Point2 {
    double x = 0;
    double y = 0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

namespace exact {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;  // 2^-53

/// Exact value as a sum of doubles, stored in increasing magnitude order.
using Expansion = std::vector<double>;

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    y = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

/// e + b, keeping the expansion non-overlapping.
inline Expansion grow(const Expansion& e, double b) {
    Expansion h;
    h.reserve(e.size() + 1);
    double q = b;
    for (double ei : e) {
        double sum = 0, err = 0;
        two_sum(q, ei, sum, err);
        if (err != 0) h.push_back(err);
        q = sum;
    }
    if (q != 0 || h.empty()) h.push_back(q);
    return h;
}

inline Expansion add(const Expansion& e, const Expansion& f) {
    Expansion h = e;
    for (double fi : f) h = grow(h, fi);
    return h;
}

inline Expansion negate(Expansion e) {
    for (double& x : e) x = -x;
    return e;
}

inline Expansion sub(const Expansion& e, const Expansion& f) { return add(e, negate(f)); }

inline Expansion scale(const Expansion& e, double b) {
    Expansion h{0.0};
    for (double ei : e) {
        double p = 0, err = 0;
        two_product(ei, b, p, err);
        h = grow(grow(h, err), p);
    }
    return h;
}

inline Expansion mul(const Expansion& e, const Expansion& f) {
    Expansion h{0.0};
    for (double fi : f) h = add(h, scale(e, fi));
    return h;
}

inline Expansion diff(double a, double b) {
    double x = 0, y = 0;
    two_sum(a, -b, x, y);
    return y == 0 ? Expansion{x} : Expansion{y, x};
}

inline int sign(const Expansion& e) {
    for (auto it = e.rbegin(); it != e.rend(); ++it)
        if (*it != 0) return *it > 0 ? 1 : -1;
    return 0;
}

/// sign of (b - a) x (d - c), exactly.
inline int cross_sign_exact(Point2 a, Point2 b, Point2 c, Point2 d) {
    const Expansion l = mul(diff(b.x, a.x), diff(d.y, c.y));
    const Expansion r = mul(diff(b.y, a.y), diff(d.x, c.x));
    return sign(sub(l, r));
}

inline int incircle_exact(Point2 a, Point2 b, Point2 c, Point2 d) {
    const Expansion adx = diff(a.x, d.x), ady = diff(a.y, d.y);
    const Expansion bdx = diff(b.x, d.x), bdy = diff(b.y, d.y);
    const Expansion cdx = diff(c.x, d.x), cdy = diff(c.y, d.y);
    const Expansion alift = add(mul(adx, adx), mul(ady, ady));
    const Expansion blift = add(mul(bdx, bdx), mul(bdy, bdy));
    const Expansion clift = add(mul(cdx, cdx), mul(cdy, cdy));
    const Expansion bc = sub(mul(bdx, cdy), mul(cdx, bdy));
    const Expansion ca = sub(mul(cdx, ady), mul(adx, cdy));
    const Expansion ab = sub(mul(adx, bdy), mul(bdx, ady));
    return sign(add(add(mul(alift, bc), mul(blift, ca)), mul(clift, ab)));
}

}  // namespace exact

/// Sign of (b - a) x (d - c).
inline int cross_sign(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double l = (b.x - a.x) * (d.y - c.y);
    const double r = (b.y - a.y) * (d.x - c.x);
    const double det = l - r;
    const double bound = 8 * exact::kEps * (std::fabs(l) + std::fabs(r));
    if (det > bound) return 1;
    if (-det > bound) return -1;
    return exact::cross_sign_exact(a, b, c, d);
}

/// +1 if a, b, c turn counter-clockwise, -1 if clockwise, 0 if collinear.
inline int orient2d(Point2 a, Point2 b, Point2 c) {
    const double l = (a.x - c.x) * (b.y - c.y);
    const double r = (a.y - c.y) * (b.x - c.x);
    const double det = l - r;
    const double bound = (3 + 16 * exact::kEps) * exact::kEps * (std::fabs(l) + std::fabs(r));
    if (det > bound) return 1;
    if (-det > bound) return -1;
    // (a - c) x (b - c) == (c -> a) x (c -> b)
    return exact::cross_sign_exact(c, a, c, b);
}

/// +1 if d lies strictly inside the circle through counter-clockwise a, b, c;
/// -1 if strictly outside; 0 if cocircular.
inline int incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;
    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    const double bound = (10 + 96 * exact::kEps) * exact::kEps * permanent;
    if (det > bound) return 1;
    if (-det > bound) return -1;
    return exact::incircle_exact(a, b, c, d);
}

}  // namespace diampart
