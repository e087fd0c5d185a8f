#pragma once

// Exhaustive reference solvers. They only use the instance/oracle types and
// plain loops, never the production solvers, so they can serve as ground
// truth for every cross-check.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ext_real.hpp"
#include "oracle.hpp"
#include "spanning.hpp"

namespace diampart::reference {

struct OracleBudget {
    std::size_t max_n_exhaustive = 14;
    std::size_t max_trials = 1000;
};

struct BruteResult {
    ExtReal objective;
    std::vector<std::uint8_t> witness;  // color per vertex; zeros form the c-class
};

namespace detail {

inline void check_budget(std::size_t n, std::size_t limit, const char* who) {
    if (n > limit)
        throw BudgetExceeded(std::string(who) + ": n = " + std::to_string(n) + " exceeds exhaustive budget " +
                             std::to_string(limit));
}

template <WeightOracle O>
std::vector<double> read_all(const O& o) {
    const std::size_t n = o.size();
    std::vector<double> w(n * n, 0.0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) w[u * n + v] = w[v * n + u] = o.weight(Vertex(u), Vertex(v));
    return w;
}

/// Same-class extreme of the coloring encoded by `mask` (bit v set = color 1).
inline ExtReal mask_extreme(const std::vector<double>& w, std::size_t n, std::uint32_t mask, bool maximize) {
    double best = maximize ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            if (((mask >> u) & 1u) != ((mask >> v) & 1u)) continue;
            const double x = w[u * n + v];
            best = maximize ? std::max(best, x) : std::min(best, x);
        }
    return ExtReal(best);
}

inline std::vector<std::uint8_t> unpack(std::uint32_t mask, std::size_t n) {
    std::vector<std::uint8_t> color(n);
    for (std::size_t v = 0; v < n; ++v) color[v] = std::uint8_t((mask >> v) & 1u);
    return color;
}

/// Best over all colorings with c zeros. maximize_inner selects diam (true)
/// or same-class minimum (false); the outer optimization is the opposite.
template <WeightOracle O>
std::vector<BruteResult> brute_all(const O& o, bool maximize_inner, const OracleBudget& budget) {
    const std::size_t n = o.size();
    check_budget(n, budget.max_n_exhaustive, "brute force");
    const std::vector<double> w = read_all(o);
    std::vector<BruteResult> best(n + 1);
    std::vector<bool> seen(n + 1, false);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        const std::size_t zeros = n - std::size_t(std::popcount(mask));
        const ExtReal val = mask_extreme(w, n, mask, maximize_inner);
        const bool improves = maximize_inner ? val < best[zeros].objective : best[zeros].objective < val;
        if (!seen[zeros] || improves) {
            seen[zeros] = true;
            best[zeros] = {val, unpack(mask, n)};
        }
    }
    return best;
}

}  // namespace detail

/// Exact diameter-partitioning optimum at cardinality c by enumeration.
template <WeightOracle O>
BruteResult brute_diameter_optimum(const O& o, std::size_t c, const OracleBudget& budget = {}) {
    ::diampart::detail::require(c <= o.size(), "brute_diameter_optimum: cardinality out of range");
    return detail::brute_all(o, true, budget)[c];
}

/// Optimum for every c, one pass over all 2^n colorings.
template <WeightOracle O>
std::vector<ExtReal> brute_diameter_profile(const O& o, const OracleBudget& budget = {}) {
    std::vector<ExtReal> out;
    for (auto& r : detail::brute_all(o, true, budget)) out.push_back(r.objective);
    return out;
}

/// Exact max-min dispersion optimum at cardinality c by enumeration.
template <WeightOracle O>
BruteResult brute_mdcc_optimum(const O& o, std::size_t c, const OracleBudget& budget = {}) {
    ::diampart::detail::require(c <= o.size(), "brute_mdcc_optimum: cardinality out of range");
    return detail::brute_all(o, false, budget)[c];
}

template <WeightOracle O>
std::vector<ExtReal> brute_mdcc_profile(const O& o, const OracleBudget& budget = {}) {
    std::vector<ExtReal> out;
    for (auto& r : detail::brute_all(o, false, budget)) out.push_back(r.objective);
    return out;
}

/// min over colorings with c zeros of the heaviest monochromatic tree edge.
inline std::vector<ExtReal> brute_bottleneck_profile(const WeightedTree& tree, const OracleBudget& budget = {}) {
    const std::size_t n = tree.size();
    detail::check_budget(n, budget.max_n_exhaustive, "brute_bottleneck_profile");
    std::vector<ExtReal> best(n + 1, kPosInf);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
        double heaviest = -std::numeric_limits<double>::infinity();
        for (const auto& e : tree.edges())
            if (((mask >> e.u) & 1u) == ((mask >> e.v) & 1u)) heaviest = std::max(heaviest, e.weight);
        const std::size_t zeros = n - std::size_t(std::popcount(mask));
        best[zeros] = min(best[zeros], ExtReal(heaviest));
    }
    return best;
}

/// Extremal spanning-tree total over all n^(n-2) labeled trees (Pruefer codes).
template <WeightOracle O>
double brute_spanning_extremum(const O& o, Sense sense) {
    const std::size_t n = o.size();
    detail::check_budget(n, 8, "brute_spanning_extremum");
    if (n <= 1) return 0.0;
    if (n == 2) return o.weight(0, 1);
    const std::vector<double> w = detail::read_all(o);

    const std::size_t len = n - 2;
    std::vector<std::size_t> code(len, 0);
    const bool maximize = sense == Sense::Max;
    double best = maximize ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    for (;;) {
        // Decode: repeatedly join the smallest leaf to the next code entry.
        std::vector<std::size_t> degree(n, 1);
        for (auto x : code) ++degree[x];
        double total = 0;
        for (auto x : code) {
            std::size_t leaf = 0;
            while (degree[leaf] != 1) ++leaf;
            total += w[leaf * n + x];
            --degree[leaf];
            --degree[x];
        }
        std::size_t a = n, b = n;
        for (std::size_t v = 0; v < n; ++v)
            if (degree[v] == 1) (a == n ? a : b) = v;
        total += w[a * n + b];
        best = maximize ? std::max(best, total) : std::min(best, total);

        std::size_t k = 0;
        while (k < len && ++code[k] == n) code[k++] = 0;
        if (k == len) break;
    }
    return best;
}

}  // namespace diampart::reference
