#pragma once

// Instance generators (lower-bound family, random matrices, points, trees)
// and query-counted solver runs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "instance.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "spanning.hpp"

namespace diampart {

inline std::size_t adversary_bit_count(std::size_t n) {
    const std::size_t h = n / 2;
    return h * (h - 1) / 2;
}

/// Lower-bound instance with explicit within-A bits (true = weight 2).
inline Instance make_adversary(std::size_t n, std::vector<bool> bits, Problem variant) {
    detail::require(n >= 4 && n % 2 == 0, "adversary: n must be even and >= 4");
    detail::require(bits.size() == adversary_bit_count(n), "adversary: need C(n/2, 2) bits");
    return Instance(AdversarySource{n, std::move(bits), variant});
}

/// Bit patterns drawn so both outcomes of each variant are common: all clear,
/// all set, a single set bit, a single cleared bit, or i.i.d. fair bits.
inline std::vector<bool> random_adversary_bits(std::size_t n, std::mt19937_64& rng) {
    const std::size_t m = adversary_bit_count(n);
    std::vector<bool> bits(m, false);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
        case 0:
            break;
        case 1:
            bits.assign(m, true);
            break;
        case 2:
            bits[pick(rng)] = true;
            break;
        case 3:
            bits.assign(m, true);
            bits[pick(rng)] = false;
            break;
        default:
            for (std::size_t i = 0; i < m; ++i) bits[i] = (rng() & 1u) != 0;
            break;
    }
    return bits;
}

inline Instance gen_adversary(std::size_t n, std::uint64_t seed, Problem variant) {
    detail::require(n >= 4 && n % 2 == 0, "adversary: n must be even and >= 4");
    std::mt19937_64 rng(seed);
    return make_adversary(n, random_adversary_bits(n, rng), variant);
}

/// Optimum at c = n/2 predicted by the construction.
inline double adversary_expected_optimum(const AdversarySource& a) {
    const bool any = std::find(a.bits.begin(), a.bits.end(), true) != a.bits.end();
    const bool all = std::find(a.bits.begin(), a.bits.end(), false) == a.bits.end();
    if (a.variant == Problem::Diameter) return any ? 2.0 : 1.0;
    return all ? 2.0 : 1.0;
}

/// Weights for random instances: uniform on [0, 1), or drawn from a small
/// pool when `duplicates` is set so that ties are common.
class WeightSampler {
public:
    WeightSampler(std::mt19937_64& rng, std::size_t pairs, bool duplicates) : rng_(rng) {
        if (duplicates) {
            pool_.resize(std::max<std::size_t>(2, pairs / 4));
            for (auto& x : pool_) x = unit_(rng_);
        }
    }

    double operator()() {
        if (pool_.empty()) return unit_(rng_);
        return pool_[std::uniform_int_distribution<std::size_t>(0, pool_.size() - 1)(rng_)];
    }

private:
    std::mt19937_64& rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
    std::vector<double> pool_;
};

inline Instance random_matrix_instance(std::size_t n, std::mt19937_64& rng, bool duplicates = false) {
    std::vector<double> w(n * n, 0.0);
    WeightSampler sample(rng, n * (n - (n > 0)) / 2, duplicates);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) w[u * n + v] = w[v * n + u] = sample();
    return Instance(MatrixSource{n, std::move(w)});
}

/// Uniform points in the unit cube; with `duplicates`, some points repeat.
inline Instance random_points_instance(std::size_t n, std::size_t dim, std::mt19937_64& rng,
                                       bool duplicates = false) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> c(n * dim);
    for (auto& x : c) x = unit(rng);
    if (duplicates && n >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t k = 0; k < n / 8 + 1; ++k) {
            const std::size_t a = pick(rng), b = pick(rng);
            std::copy_n(c.begin() + a * dim, dim, c.begin() + b * dim);
        }
    }
    return Instance(PointsSource{n, dim, std::move(c)});
}

/// Random labeled tree (random attachment, shuffled labels and edge order).
inline WeightedTree random_tree(std::size_t n, std::mt19937_64& rng, bool duplicates = false) {
    if (n <= 1) return WeightedTree(n, {});
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{0});
    std::shuffle(label.begin(), label.end(), rng);
    WeightSampler sample(rng, n - 1, duplicates);
    std::vector<TreeEdge> edges;
    edges.reserve(n - 1);
    for (std::size_t v = 1; v < n; ++v) {
        const std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        edges.push_back({label[u], label[v], sample()});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return WeightedTree(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Counted runs

struct CountedReduction {
    Reduction reduction;
    std::uint64_t queries = 0;
};

/// Generic reduction with every pair-weight read counted.
inline CountedReduction reduce_counting(const Instance& inst, Problem problem) {
    if (const auto* p = inst.points()) {
        const SquaredEuclideanOracle sq(p->coords, p->n, p->dim);
        const CountingOracle counted(sq);
        CountedReduction out{detail::reduce_generic(counted, problem), counted.queries()};
        out.reduction.sqrt_result = true;
        return out;
    }
    return visit_oracle(inst, [&](const auto& o) {
        const CountingOracle counted(o);
        Reduction r = detail::reduce_generic(counted, problem);
        return CountedReduction{std::move(r), counted.queries()};
    });
}

struct CountedRun {
    std::optional<PartitionResult> single;     // set for one cardinality
    std::optional<ProfileSolution> profile;   // set for all cardinalities
    std::uint64_t queries = 0;
};

/// Solves through a counting wrapper; `c` empty means all cardinalities.
/// Only the reduction reads weights, so its count is the run's count.
inline CountedRun run_with_counting(const Instance& inst, Problem problem, std::optional<std::size_t> c) {
    if (c) detail::require(*c <= inst.size(), "run_with_counting: cardinality out of range");
    CountedReduction cr = reduce_counting(inst, problem);
    CountedRun run;
    run.queries = cr.queries;
    if (c) {
        run.single = solve_reduced_single(cr.reduction, *c, objective_kind(problem));
    } else {
        run.profile.emplace(std::move(cr.reduction), objective_kind(problem));
    }
    return run;
}

}  // namespace diampart
