#pragma once

// Full solvers for diameter partitioning and its max-min dual (2-MDCC).
//
// On a maximum spanning tree T with proper 2-coloring chi, every 2-coloring
// phi satisfies
//     diam(phi) = max(diam(chi), M(phi))
// so the optimum at cardinality c is max(diam(chi), M*(c)). The dual swaps
// max and min throughout: minimum spanning tree, same-class closest pair, and
// the bottleneck problem on the negated tree.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bottleneck_dp.hpp"
#include "errors.hpp"
#include "ext_real.hpp"
#include "geometry.hpp"
#include "instance.hpp"
#include "oracle.hpp"
#include "single_cardinality.hpp"
#include "spanning.hpp"

namespace diampart {

enum class ObjectiveKind { DiameterMinMax, DispersionMaxMin };

inline ObjectiveKind objective_kind(Problem p) {
    return p == Problem::Diameter ? ObjectiveKind::DiameterMinMax : ObjectiveKind::DispersionMaxMin;
}

struct PartitionResult {
    std::vector<std::uint8_t> coloring;
    std::size_t cardinality = 0;  // number of color-0 vertices
    ExtReal objective;
    ObjectiveKind kind = ObjectiveKind::DiameterMinMax;
};

/// Largest (diameter) or smallest (dispersion) same-class pair weight of a
/// coloring, by direct O(n^2) scan.
template <WeightOracle O>
ExtReal evaluate_partition(const O& oracle, std::span<const std::uint8_t> coloring, ObjectiveKind kind) {
    detail::require(coloring.size() == oracle.size(), "evaluate_partition: coloring length differs from n");
    return class_extreme(oracle, make_bipartition({coloring.begin(), coloring.end()}),
                         kind == ObjectiveKind::DiameterMinMax ? Sense::Max : Sense::Min);
}

inline ExtReal evaluate_partition(const Instance& inst, std::span<const std::uint8_t> coloring, ObjectiveKind kind) {
    return visit_oracle(inst, [&](const auto& o) { return evaluate_partition(o, coloring, kind); });
}

/// Everything needed to answer any cardinality, in min-max orientation:
/// objective(c) = report(max(chi_extreme, M*_tree(c))).
struct Reduction {
    WeightedTree tree;
    Bipartition chi;
    ExtReal chi_extreme;
    bool negate_result = false;  // dual problems were solved on negated weights
    bool sqrt_result = false;    // weights were squared distances

    ExtReal report(ExtReal minmax) const {
        ExtReal v = negate_result ? -minmax : minmax;
        return sqrt_result ? v.map_finite([](double x) { return std::sqrt(x); }) : v;
    }
};

/// MAX spanning tree by Prim, its 2-coloring and diam(chi) by scan. The oracle
/// is read once per pair into a dense table shared by both scans, so exactly
/// n(n-1)/2 queries reach it.
template <WeightOracle O>
Reduction reduce_minmax(const O& oracle) {
    const DenseWeights dense = DenseWeights::read(oracle);
    Reduction r;
    r.tree = build_spanning_tree(dense, Sense::Max);
    r.chi = bipartition(r.tree);
    r.chi_extreme = class_extreme(dense, r.chi, Sense::Max);
    return r;
}

/// Answers for every cardinality; witnesses are rebuilt on request.
class ProfileSolution {
public:
    ProfileSolution(Reduction red, ObjectiveKind kind) : red_(std::move(red)), kind_(kind) {
        dp_ = solve_all_cardinalities(red_.tree);
        values_.reserve(dp_.profile.size());
        for (const ExtReal m : dp_.profile.values) values_.push_back(red_.report(max(red_.chi_extreme, m)));
    }

    std::size_t size() const noexcept { return red_.tree.size(); }
    std::span<const ExtReal> values() const noexcept { return values_; }
    ExtReal operator[](std::size_t c) const { return values_.at(c); }
    ObjectiveKind kind() const noexcept { return kind_; }
    const Reduction& reduction() const noexcept { return red_; }
    const BottleneckSolution& bottleneck() const noexcept { return dp_; }

    PartitionResult witness(std::size_t c) const {
        detail::require(c <= size(), "witness: cardinality out of range");
        return {reconstruct(red_.tree, dp_.log, c), c, values_[c], kind_};
    }

private:
    Reduction red_;
    ObjectiveKind kind_;
    BottleneckSolution dp_;
    std::vector<ExtReal> values_;
};

inline PartitionResult solve_reduced_single(const Reduction& red, std::size_t c, ObjectiveKind kind) {
    detail::require(c <= red.tree.size(), "solve: cardinality out of range");
    SingleCardinalityResult sc = solve_single_with_witness(red.tree, c);
    return {std::move(sc.coloring), c, red.report(max(red.chi_extreme, sc.value)), kind};
}

// ---------------------------------------------------------------------------
// Oracle-level solvers

template <WeightOracle O>
ProfileSolution solve_diameter_all(const O& oracle) {
    return ProfileSolution(reduce_minmax(oracle), ObjectiveKind::DiameterMinMax);
}

template <WeightOracle O>
PartitionResult solve_diameter_single(const O& oracle, std::size_t c) {
    detail::require(c <= oracle.size(), "solve_diameter_single: cardinality out of range");
    return solve_reduced_single(reduce_minmax(oracle), c, ObjectiveKind::DiameterMinMax);
}

/// Max-min dispersion by negation: the optimum is -(diameter optimum on -w).
template <WeightOracle O>
ProfileSolution solve_mdcc_all(const O& oracle) {
    Reduction r = reduce_minmax(negate_oracle(oracle));
    r.negate_result = true;
    return ProfileSolution(std::move(r), ObjectiveKind::DispersionMaxMin);
}

template <WeightOracle O>
PartitionResult solve_mdcc_single(const O& oracle, std::size_t c) {
    detail::require(c <= oracle.size(), "solve_mdcc_single: cardinality out of range");
    Reduction r = reduce_minmax(negate_oracle(oracle));
    r.negate_result = true;
    return solve_reduced_single(r, c, ObjectiveKind::DispersionMaxMin);
}

// ---------------------------------------------------------------------------
// Planar fast path

/// Diameter: Prim MAX tree (O(n^2)) plus per-class hull diameters.
/// Dispersion: Delaunay EMST plus per-class closest pairs.
/// Both work on squared distances and report true distances.
inline Reduction reduce_planar(const PointSet2D& ps, Problem problem) {
    Reduction r;
    r.sqrt_result = true;
    if (problem == Problem::Diameter) {
        std::vector<double> flat(2 * ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            flat[2 * i] = ps[i].x;
            flat[2 * i + 1] = ps[i].y;
        }
        r.tree = build_spanning_tree(SquaredEuclideanOracle(flat, ps.size(), 2), Sense::Max);
        r.chi = bipartition(r.tree);
        r.chi_extreme = class_hull_diameter(ps, r.chi.color);
    } else {
        r.tree = ps.empty() ? WeightedTree() : delaunay_emst_squared(ps).negated();
        r.chi = bipartition(r.tree);
        r.chi_extreme = -class_closest_pair(ps, r.chi.color);
        r.negate_result = true;
    }
    return r;
}

namespace detail {

template <WeightOracle O>
Reduction reduce_generic(const O& oracle, Problem problem) {
    if (problem == Problem::Diameter) return reduce_minmax(oracle);
    Reduction r = reduce_minmax(negate_oracle(oracle));
    r.negate_result = true;
    return r;
}

/// Generic reduction for any instance. Points are solved on squared distances.
inline Reduction reduce_instance(const Instance& inst, Problem problem) {
    if (const auto* p = inst.points()) {
        Reduction r = reduce_generic(SquaredEuclideanOracle(p->coords, p->n, p->dim), problem);
        r.sqrt_result = true;
        return r;
    }
    return visit_oracle(inst, [&](const auto& o) { return reduce_generic(o, problem); });
}

inline Reduction reduce_points_fast(const PointsSource& pts, Problem problem) {
    detail::require(pts.dim >= 1, "euclidean_fast_path: dimension must be >= 1");
    if (pts.dim == 2) return reduce_planar(to_point_set(pts.coords), problem);
    return reduce_instance(Instance(pts), problem);
}

}  // namespace detail

/// Single cardinality on points. d == 2 uses the planar subroutines; other
/// dimensions fall back to the O(n^2) generic route.
inline PartitionResult euclidean_fast_path(const PointsSource& pts, std::size_t c, Problem problem) {
    detail::require(c <= pts.n, "euclidean_fast_path: cardinality out of range");
    return solve_reduced_single(detail::reduce_points_fast(pts, problem), c, objective_kind(problem));
}

inline ProfileSolution euclidean_fast_path_all(const PointsSource& pts, Problem problem) {
    return ProfileSolution(detail::reduce_points_fast(pts, problem), objective_kind(problem));
}

// ---------------------------------------------------------------------------
// Instance-level entry points (generic route)

inline ProfileSolution solve_all(const Instance& inst, Problem problem) {
    return ProfileSolution(detail::reduce_instance(inst, problem), objective_kind(problem));
}

inline PartitionResult solve(const Instance& inst, Problem problem, std::size_t c) {
    detail::require(c <= inst.size(), "solve: cardinality out of range");
    return solve_reduced_single(detail::reduce_instance(inst, problem), c, objective_kind(problem));
}

}  // namespace diampart
