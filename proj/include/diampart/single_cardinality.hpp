#pragma once

// M*(c) for one cardinality: binary search over tree-edge weights with a
// feasibility test on the forest of strictly heavier edges.
//
// A forest is properly 2-colorable with exactly c zeros iff one can pick, for
// every component, which of its two bipartition sides gets color 0 so that the
// picked sizes sum to c. That is a subset-sum question over sums <= n, answered
// with a word-packed reachability bitset.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "errors.hpp"
#include "ext_real.hpp"
#include "spanning.hpp"

namespace diampart {

/// Side sizes (a, b) of one forest component, a >= b.
using SidePair = std::pair<std::size_t, std::size_t>;

struct ComponentSummary {
    std::vector<SidePair> items;  // isolated vertices appear as (1, 0)
};

/// Components of T_{>lambda}, each with its own proper 2-coloring.
struct ForestSplit {
    std::vector<std::uint32_t> component;  // per vertex
    std::vector<std::uint8_t> side;        // per vertex, proper within its component
    std::vector<SidePair> sides;           // per component: (#side 0, #side 1)
};

inline ForestSplit split_forest(const WeightedTree& tree, double lambda) {
    const std::size_t n = tree.size();
    ForestSplit f;
    f.component.assign(n, std::uint32_t(-1));
    f.side.assign(n, 0);

    std::vector<std::size_t> deg(n + 1, 0);
    for (const auto& e : tree.edges())
        if (e.weight > lambda) {
            ++deg[e.u + 1];
            ++deg[e.v + 1];
        }
    for (std::size_t i = 0; i < n; ++i) deg[i + 1] += deg[i];
    std::vector<Vertex> adj(deg[n]);
    std::vector<std::size_t> fill(deg.begin(), deg.end() - 1);
    for (const auto& e : tree.edges())
        if (e.weight > lambda) {
            adj[fill[e.u]++] = e.v;
            adj[fill[e.v]++] = e.u;
        }

    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        if (f.component[s] != std::uint32_t(-1)) continue;
        const auto id = std::uint32_t(f.sides.size());
        SidePair count{0, 0};
        queue.assign(1, s);
        f.component[s] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            (f.side[u] == 0 ? count.first : count.second) += 1;
            for (std::size_t k = deg[u]; k < deg[u + 1]; ++k) {
                const Vertex v = adj[k];
                if (f.component[v] != std::uint32_t(-1)) continue;
                f.component[v] = id;
                f.side[v] = f.side[u] ^ 1;
                queue.push_back(v);
            }
        }
        f.sides.push_back(count);
    }
    return f;
}

inline ComponentSummary summarize_forest(const WeightedTree& tree, double lambda) {
    ComponentSummary s;
    for (auto [a, b] : split_forest(tree, lambda).sides) s.items.emplace_back(std::max(a, b), std::min(a, b));
    return s;
}

namespace detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Sets bit x whenever some bit in [x - k, x] was set.
inline Bits smear(const Bits& in, std::size_t k) {
    // Doubling: after each step acc covers shifts 0..covered.
    Bits acc = in;
    std::size_t covered = 0;
    while (covered < k) {
        const std::size_t step = std::min(covered + 1, k - covered);
        acc |= acc << step;
        covered += step;
    }
    return acc;
}

/// Reachable sums over items, with optional per-item history for witnesses.
/// Items equal to (1, 0) are folded into one range step.
struct SubsetSumRun {
    std::vector<std::size_t> general;  // indices of items that are not (1, 0)
    std::size_t unit_count = 0;
    std::vector<Bits> history;         // reach before each general item, then before the unit step
    Bits reach;

    SubsetSumRun(std::span<const SidePair> items, std::size_t width, bool keep_history) {
        reach = Bits(width + 1);
        reach.set(0);
        for (std::size_t i = 0; i < items.size(); ++i) {
            const auto [a, b] = items[i];
            if ((a == 1 && b == 0) || (a == 0 && b == 1)) {
                ++unit_count;
                continue;
            }
            general.push_back(i);
            if (keep_history) history.push_back(reach);
            reach = (reach << a) | (reach << b);
        }
        if (keep_history) history.push_back(reach);
        reach = smear(reach, unit_count);
    }
};

inline std::size_t total_width(std::span<const SidePair> items) {
    std::size_t w = 0;
    for (auto [a, b] : items) w += std::max(a, b);
    return w;
}

}  // namespace detail

/// True iff some choice x_i in {a_i, b_i} per item sums to `target`.
inline bool subset_sum_reachable(std::span<const SidePair> items, std::size_t target) {
    const std::size_t width = detail::total_width(items);
    if (target > width) return false;
    return detail::SubsetSumRun(items, width, false).reach.test(target);
}

/// Per item: true when the first member of the pair is picked.
inline std::optional<std::vector<bool>> subset_sum_witness(std::span<const SidePair> items, std::size_t target) {
    const std::size_t width = detail::total_width(items);
    if (target > width) return std::nullopt;
    detail::SubsetSumRun run(items, width, true);
    if (!run.reach.test(target)) return std::nullopt;

    std::vector<bool> pick_first(items.size(), false);
    // Undo the unit step: find a pre-step sum within unit_count below target.
    const detail::Bits& before_units = run.history.back();
    std::size_t r = target;
    std::size_t units = 0;
    while (!before_units.test(r - units)) ++units;
    r -= units;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto [a, b] = items[i];
        if ((a == 1 && b == 0) || (a == 0 && b == 1)) {
            const bool give_one = units > 0;
            if (give_one) --units;
            pick_first[i] = a == 1 ? give_one : !give_one;
        }
    }
    for (std::size_t k = run.general.size(); k-- > 0;) {
        const std::size_t i = run.general[k];
        const auto [a, b] = items[i];
        const detail::Bits& prev = run.history[k];
        if (r >= a && prev.test(r - a)) {
            pick_first[i] = true;
            r -= a;
        } else {
            pick_first[i] = false;
            r -= b;
        }
    }
    return pick_first;
}

/// Can T_{>lambda} be properly 2-colored with exactly c zeros?
inline bool feasible(const WeightedTree& tree, double lambda, std::size_t c) {
    detail::require(c <= tree.size(), "feasible: cardinality out of range");
    const ComponentSummary s = summarize_forest(tree, lambda);
    return subset_sum_reachable(s.items, c);
}

struct SingleCardinalityResult {
    ExtReal value;                       // M*(c)
    std::vector<std::uint8_t> coloring;  // exactly c zeros, mono_max == value
};

namespace detail {

inline std::vector<double> distinct_weights(const WeightedTree& tree) {
    std::vector<double> w;
    w.reserve(tree.edges().size());
    for (const auto& e : tree.edges()) w.push_back(e.weight);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

/// Coloring of T_{>lambda} with c zeros, from a subset-sum witness.
inline std::optional<std::vector<std::uint8_t>> forest_coloring(const WeightedTree& tree, double lambda,
                                                                std::size_t c) {
    const ForestSplit f = split_forest(tree, lambda);
    const auto pick_side0 = subset_sum_witness(f.sides, c);
    if (!pick_side0) return std::nullopt;
    std::vector<std::uint8_t> color(tree.size());
    for (std::size_t v = 0; v < color.size(); ++v) {
        const bool zero_side = (*pick_side0)[f.component[v]] ? f.side[v] == 0 : f.side[v] == 1;
        color[v] = zero_side ? 0 : 1;
    }
    return color;
}

}  // namespace detail

/// M*(c) with a witness coloring.
inline SingleCardinalityResult solve_single_with_witness(const WeightedTree& tree, std::size_t c) {
    const std::size_t n = tree.size();
    detail::require(c <= n, "solve_single: cardinality out of range");

    const std::size_t half = std::min(c, n - c);
    const bool flipped = half != c;
    auto finish = [&](ExtReal value, std::vector<std::uint8_t> color) {
        if (flipped)
            for (auto& x : color) x ^= 1;
        return SingleCardinalityResult{value, std::move(color)};
    };

    const Bipartition chi = bipartition(tree);
    if (chi.size0 == half || chi.size1() == half) {
        auto color = chi.color;
        if (chi.size0 != half)
            for (auto& x : color) x ^= 1;
        return finish(kNegInf, std::move(color));
    }

    // Least candidate weight whose strictly-heavier forest is colorable;
    // the largest weight always is (empty forest).
    const std::vector<double> cand = detail::distinct_weights(tree);
    std::size_t lo = 0, hi = cand.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(tree, cand[mid], half)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    auto color = detail::forest_coloring(tree, cand[lo], half);
    if (!color) throw ContractViolation("solve_single: feasibility witness missing");
    return finish(ExtReal(cand[lo]), std::move(*color));
}

inline ExtReal solve_single(const WeightedTree& tree, std::size_t c) {
    return solve_single_with_witness(tree, c).value;
}

}  // namespace diampart
