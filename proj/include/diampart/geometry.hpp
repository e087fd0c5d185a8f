#pragma once

// Planar subroutines for the Euclidean solvers: closest pair, convex hull
// diameter, Delaunay triangulation and the Euclidean minimum spanning tree.
// Everything compares squared distances computed by one shared formula.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ext_real.hpp"
#include "oracle.hpp"
#include "predicates.hpp"
#include "spanning.hpp"

namespace diampart {

using PointSet2D = std::vector<Point2>;

inline double squared_distance(Point2 a, Point2 b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    double s = 0;
    s += dx * dx;
    s += dy * dy;
    return s;
}

inline PointSet2D to_point_set(std::span<const double> coords) {
    detail::require(coords.size() % 2 == 0, "to_point_set: need an even number of coordinates");
    PointSet2D ps(coords.size() / 2);
    for (std::size_t i = 0; i < ps.size(); ++i) ps[i] = {coords[2 * i], coords[2 * i + 1]};
    return ps;
}

struct ClosestPair {
    Vertex i = 0;
    Vertex j = 0;
    double squared = 0;
};

namespace detail {

inline bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

struct ClosestPairSolver {
    const PointSet2D& pts;
    std::vector<Vertex> by_x;
    std::vector<Vertex> buf;
    ClosestPair best;

    explicit ClosestPairSolver(const PointSet2D& p) : pts(p), by_x(p.size()), buf(p.size()) {
        std::iota(by_x.begin(), by_x.end(), Vertex{0});
        std::sort(by_x.begin(), by_x.end(), [&](Vertex a, Vertex b) { return lex_less(pts[a], pts[b]); });
        best = {by_x[0], by_x[1], squared_distance(pts[by_x[0]], pts[by_x[1]])};
    }

    void consider(Vertex a, Vertex b) {
        const double d = squared_distance(pts[a], pts[b]);
        if (d < best.squared) best = {a, b, d};
    }

    // Sorts by_x[lo, hi) by y on return.
    void run(std::size_t lo, std::size_t hi) {
        if (hi - lo <= 3) {
            for (std::size_t a = lo; a < hi; ++a)
                for (std::size_t b = a + 1; b < hi; ++b) consider(by_x[a], by_x[b]);
            std::sort(by_x.begin() + lo, by_x.begin() + hi,
                      [&](Vertex a, Vertex b) { return pts[a].y < pts[b].y; });
            return;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        const double mid_x = pts[by_x[mid]].x;
        run(lo, mid);
        run(mid, hi);
        std::merge(by_x.begin() + lo, by_x.begin() + mid, by_x.begin() + mid, by_x.begin() + hi, buf.begin(),
                   [&](Vertex a, Vertex b) { return pts[a].y < pts[b].y; });
        std::copy(buf.begin(), buf.begin() + (hi - lo), by_x.begin() + lo);

        // Strip candidates. Rounded coordinate gaps never exceed the rounded
        // distance, so skipping on `gap^2 > best` cannot drop the true minimum.
        std::size_t strip = 0;
        for (std::size_t k = lo; k < hi; ++k) {
            const Vertex v = by_x[k];
            const double gap = pts[v].x - mid_x;
            if (gap * gap > best.squared) continue;
            for (std::size_t s = strip; s-- > 0;) {
                const double dy = pts[v].y - pts[buf[s]].y;
                if (dy * dy > best.squared) break;
                consider(buf[s], v);
            }
            buf[strip++] = v;
        }
    }
};

}  // namespace detail

/// Globally closest pair by divide and conquer, O(n log n).
inline ClosestPair closest_pair(const PointSet2D& ps) {
    detail::require(ps.size() >= 2, "closest_pair: need at least two points");
    detail::ClosestPairSolver solver(ps);
    solver.run(0, ps.size());
    ClosestPair r = solver.best;
    if (r.i > r.j) std::swap(r.i, r.j);
    return r;
}

/// Convex hull vertices (indices into ps) in counter-clockwise order, without
/// collinear points. Duplicates collapse; a degenerate hull has 1 or 2 entries.
inline std::vector<Vertex> convex_hull(const PointSet2D& ps, std::span<const Vertex> subset) {
    std::vector<Vertex> idx(subset.begin(), subset.end());
    std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return detail::lex_less(ps[a], ps[b]); });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return ps[a] == ps[b]; }), idx.end());
    if (idx.size() <= 2) return idx;

    std::vector<Vertex> hull(2 * idx.size());
    std::size_t k = 0;
    for (Vertex v : idx) {
        while (k >= 2 && orient2d(ps[hull[k - 2]], ps[hull[k - 1]], ps[v]) <= 0) --k;
        hull[k++] = v;
    }
    for (std::size_t i = idx.size() - 1, lower = k + 1; i-- > 0;) {
        const Vertex v = idx[i];
        while (k >= lower && orient2d(ps[hull[k - 2]], ps[hull[k - 1]], ps[v]) <= 0) --k;
        hull[k++] = v;
    }
    hull.resize(k - 1);
    return hull;
}

/// Largest squared distance within `subset` via rotating calipers on its hull.
/// -inf when the subset has at most one point.
inline ExtReal hull_diameter(const PointSet2D& ps, std::span<const Vertex> subset) {
    if (subset.size() <= 1) return kNegInf;
    const std::vector<Vertex> h = convex_hull(ps, subset);
    if (h.size() == 1) return ExtReal(0.0);
    if (h.size() == 2) return ExtReal(squared_distance(ps[h[0]], ps[h[1]]));

    const std::size_t m = h.size();
    double best = 0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < j; ++i) {
        for (;; j = (j + 1) % m) {
            best = std::max(best, squared_distance(ps[h[i]], ps[h[j]]));
            // Advance the far caliper while edge j still turns against edge i.
            if (cross_sign(ps[h[j]], ps[h[(j + 1) % m]], ps[h[i]], ps[h[i + 1]]) >= 0) break;
        }
    }
    return ExtReal(best);
}

inline ExtReal hull_diameter(const PointSet2D& ps) {
    std::vector<Vertex> all(ps.size());
    std::iota(all.begin(), all.end(), Vertex{0});
    return hull_diameter(ps, all);
}

// ---------------------------------------------------------------------------
// Delaunay triangulation (Guibas-Stolfi divide and conquer on a quad-edge
// structure) over the distinct points.

namespace detail {

class QuadEdgeMesh {
public:
    struct Edge {
        Vertex origin = 0;
        Edge* rot = nullptr;
        Edge* onext = nullptr;
        std::size_t group = 0;

        Edge* rev() const { return rot->rot; }
        Edge* lnext() const { return rot->rev()->onext->rot; }
        Edge* oprev() const { return rot->onext->rot; }
        Vertex dest() const { return rev()->origin; }
    };

    explicit QuadEdgeMesh(const std::vector<Point2>& pts) : pts_(pts) {}

    Edge* make_edge(Vertex from, Vertex to) {
        auto& g = groups_.emplace_back();
        const std::size_t id = groups_.size() - 1;
        Edge* e = g.e.data();
        for (int k = 0; k < 4; ++k) {
            e[k].rot = &e[(k + 1) % 4];
            e[k].group = id;
        }
        e[0].origin = from;
        e[2].origin = to;
        e[0].onext = &e[0];
        e[2].onext = &e[2];
        e[1].onext = &e[3];
        e[3].onext = &e[1];
        return &e[0];
    }

    static void splice(Edge* a, Edge* b) {
        std::swap(a->onext->rot->onext, b->onext->rot->onext);
        std::swap(a->onext, b->onext);
    }

    void delete_edge(Edge* e) {
        splice(e, e->oprev());
        splice(e->rev(), e->rev()->oprev());
        groups_[e->group].alive = false;
    }

    Edge* connect(Edge* a, Edge* b) {
        Edge* e = make_edge(a->dest(), b->origin);
        splice(e, a->lnext());
        splice(e->rev(), b);
        return e;
    }

    bool left_of(Vertex p, const Edge* e) const { return orient2d(pts_[e->origin], pts_[e->dest()], pts_[p]) > 0; }
    bool right_of(Vertex p, const Edge* e) const { return orient2d(pts_[e->origin], pts_[e->dest()], pts_[p]) < 0; }
    bool in_circle(Vertex a, Vertex b, Vertex c, Vertex d) const {
        return incircle(pts_[a], pts_[b], pts_[c], pts_[d]) > 0;
    }

    // Points [l, r] must be sorted lexicographically and distinct.
    std::pair<Edge*, Edge*> build(Vertex l, Vertex r) {
        if (r - l + 1 == 2) {
            Edge* e = make_edge(l, r);
            return {e, e->rev()};
        }
        if (r - l + 1 == 3) {
            Edge* a = make_edge(l, l + 1);
            Edge* b = make_edge(l + 1, r);
            splice(a->rev(), b);
            const int sg = orient2d(pts_[l], pts_[l + 1], pts_[r]);
            if (sg == 0) return {a, b->rev()};
            Edge* c = connect(b, a);
            if (sg > 0) return {a, b->rev()};
            return {c->rev(), c};
        }
        const Vertex mid = l + (r - l) / 2;
        auto [ldo, ldi] = build(l, mid);
        auto [rdi, rdo] = build(mid + 1, r);
        // Lower common tangent.
        for (;;) {
            if (left_of(rdi->origin, ldi)) {
                ldi = ldi->lnext();
            } else if (right_of(ldi->origin, rdi)) {
                rdi = rdi->rev()->onext;
            } else {
                break;
            }
        }
        Edge* basel = connect(rdi->rev(), ldi);
        auto valid = [&](Edge* e) { return right_of(e->dest(), basel); };
        if (ldi->origin == ldo->origin) ldo = basel->rev();
        if (rdi->origin == rdo->origin) rdo = basel;
        for (;;) {
            Edge* lcand = basel->rev()->onext;
            if (valid(lcand)) {
                while (in_circle(basel->dest(), basel->origin, lcand->dest(), lcand->onext->dest())) {
                    Edge* t = lcand->onext;
                    delete_edge(lcand);
                    lcand = t;
                }
            }
            Edge* rcand = basel->oprev();
            if (valid(rcand)) {
                while (in_circle(basel->dest(), basel->origin, rcand->dest(), rcand->oprev()->dest())) {
                    Edge* t = rcand->oprev();
                    delete_edge(rcand);
                    rcand = t;
                }
            }
            const bool lv = valid(lcand), rv = valid(rcand);
            if (!lv && !rv) break;
            if (!lv || (rv && in_circle(lcand->dest(), lcand->origin, rcand->origin, rcand->dest()))) {
                basel = connect(rcand, basel->rev());
            } else {
                basel = connect(basel->rev(), lcand->rev());
            }
        }
        return {ldo, rdo};
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto& g : groups_)
            if (g.alive) out.emplace_back(g.e[0].origin, g.e[2].origin);
        return out;
    }

private:
    struct Group {
        std::array<Edge, 4> e;
        bool alive = true;
    };

    const std::vector<Point2>& pts_;
    std::deque<Group> groups_;
};

/// Distinct points sorted lexicographically, and for every input index the
/// position of its representative in that list.
struct DistinctPoints {
    std::vector<Point2> pts;
    std::vector<Vertex> original;  // a representative input index per distinct point
    std::vector<Vertex> slot;      // per input index
};

inline DistinctPoints distinct_points(const PointSet2D& ps) {
    DistinctPoints d;
    std::vector<Vertex> idx(ps.size());
    std::iota(idx.begin(), idx.end(), Vertex{0});
    std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) {
        return lex_less(ps[a], ps[b]) || (ps[a] == ps[b] && a < b);
    });
    d.slot.resize(ps.size());
    for (Vertex v : idx) {
        if (d.pts.empty() || !(d.pts.back() == ps[v])) {
            d.pts.push_back(ps[v]);
            d.original.push_back(v);
        }
        d.slot[v] = Vertex(d.pts.size() - 1);
    }
    return d;
}

inline std::vector<std::pair<Vertex, Vertex>> triangulate_distinct(const std::vector<Point2>& pts) {
    const std::size_t m = pts.size();
    std::vector<std::pair<Vertex, Vertex>> out;
    if (m < 2) return out;

    bool collinear = true;
    for (std::size_t k = 2; k < m && collinear; ++k) collinear = orient2d(pts[0], pts[1], pts[k]) == 0;
    if (collinear) {
        // Lexicographic order runs along the line.
        for (Vertex k = 0; k + 1 < m; ++k) out.emplace_back(k, k + 1);
        return out;
    }
    QuadEdgeMesh mesh(pts);
    mesh.build(0, Vertex(m - 1));
    return mesh.edges();
}

}  // namespace detail

/// Delaunay edges as pairs of input indices (one representative per distinct
/// point, the smallest index), each with first < second.
inline std::vector<std::pair<Vertex, Vertex>> delaunay_edges(const PointSet2D& ps) {
    const detail::DistinctPoints d = detail::distinct_points(ps);
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto [a, b] : detail::triangulate_distinct(d.pts)) {
        Vertex u = d.original[a], v = d.original[b];
        if (u > v) std::swap(u, v);
        out.emplace_back(u, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Euclidean minimum spanning tree with squared-distance weights: Kruskal over
/// the Delaunay edges, ties broken by (i, j). Duplicate points hang off their
/// representative with weight 0.
inline WeightedTree delaunay_emst_squared(const PointSet2D& ps) {
    const std::size_t n = ps.size();
    detail::require(n >= 1, "delaunay_emst: need at least one point");
    const detail::DistinctPoints d = detail::distinct_points(ps);

    std::vector<TreeEdge> edges;
    edges.reserve(n - 1);
    for (Vertex v = 0; v < n; ++v) {
        const Vertex rep = d.original[d.slot[v]];
        if (rep != v) edges.push_back({rep, v, 0.0});
    }

    std::vector<std::tuple<double, Vertex, Vertex>> cand;
    for (auto [a, b] : detail::triangulate_distinct(d.pts)) {
        Vertex u = d.original[a], v = d.original[b];
        if (u > v) std::swap(u, v);
        cand.emplace_back(squared_distance(ps[u], ps[v]), u, v);
    }
    std::sort(cand.begin(), cand.end());
    detail::DisjointSets dsu(n);
    for (const auto& [w, u, v] : cand)
        if (dsu.unite(u, v)) edges.push_back({u, v, w});
    return WeightedTree(n, std::move(edges));
}

/// Same tree with true Euclidean edge lengths.
inline WeightedTree delaunay_emst(const PointSet2D& ps) {
    const WeightedTree sq = delaunay_emst_squared(ps);
    std::vector<TreeEdge> edges(sq.edges().begin(), sq.edges().end());
    for (auto& e : edges) e.weight = std::sqrt(e.weight);
    return WeightedTree(ps.size(), std::move(edges));
}

/// Minimum squared distance between two points of the same class; +inf when
/// both classes have at most one point.
inline ExtReal class_closest_pair(const PointSet2D& ps, std::span<const std::uint8_t> color) {
    ExtReal best = kPosInf;
    for (std::uint8_t cls = 0; cls < 2; ++cls) {
        PointSet2D sub;
        for (std::size_t v = 0; v < ps.size(); ++v)
            if (color[v] == cls) sub.push_back(ps[v]);
        if (sub.size() >= 2) best = min(best, ExtReal(closest_pair(sub).squared));
    }
    return best;
}

/// Maximum squared distance between two points of the same class; -inf when
/// both classes have at most one point.
inline ExtReal class_hull_diameter(const PointSet2D& ps, std::span<const std::uint8_t> color) {
    ExtReal best = kNegInf;
    for (std::uint8_t cls = 0; cls < 2; ++cls) {
        std::vector<Vertex> sub;
        for (Vertex v = 0; v < ps.size(); ++v)
            if (color[v] == cls) sub.push_back(v);
        best = max(best, hull_diameter(ps, sub));
    }
    return best;
}

}  // namespace diampart
