#pragma once

// Helpers shared by the test suites. Nothing here calls the production solvers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "diampart/diampart.hpp"

namespace diampart::testing {

/// Kruskal over all pairs, used only to cross-check Prim.
template <WeightOracle O>
std::vector<std::tuple<double, Vertex, Vertex>> kruskal_edges(const O& o, Sense sense) {
    const std::size_t n = o.size();
    std::vector<std::tuple<double, Vertex, Vertex>> all;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all.emplace_back(o.weight(u, v), u, v);
    std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
        return sense == Sense::Max ? std::get<0>(a) > std::get<0>(b) : std::get<0>(a) < std::get<0>(b);
    });
    std::vector<Vertex> root(n);
    for (Vertex v = 0; v < n; ++v) root[v] = v;
    auto find = [&](Vertex x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    std::vector<std::tuple<double, Vertex, Vertex>> out;
    for (auto& [w, u, v] : all) {
        const Vertex a = find(u), b = find(v);
        if (a == b) continue;
        root[a] = b;
        out.emplace_back(w, u, v);
    }
    return out;
}

inline std::vector<std::tuple<double, Vertex, Vertex>> sorted_edges(const WeightedTree& t) {
    std::vector<std::tuple<double, Vertex, Vertex>> out;
    for (const auto& e : t.edges()) out.emplace_back(e.weight, std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
}

inline double total_weight(const WeightedTree& t) {
    double s = 0;
    for (const auto& e : t.edges()) s += e.weight;
    return s;
}

/// Edges on the tree path between a and b.
inline std::vector<TreeEdge> tree_path(const WeightedTree& t, Vertex a, Vertex b) {
    const RootedTree rt = root_tree(t, a);
    std::vector<TreeEdge> path;
    for (Vertex v = b; v != a; v = rt.parent[v]) path.push_back({rt.parent[v], v, rt.parent_weight[v]});
    return path;
}

inline std::vector<std::uint8_t> random_coloring(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> c(n);
    for (auto& x : c) x = std::uint8_t(rng() & 1u);
    return c;
}

inline std::size_t zeros(const std::vector<std::uint8_t>& c) { return std::size_t(std::count(c.begin(), c.end(), 0)); }

inline WeightedTree path_tree(std::vector<double> weights) {
    std::vector<TreeEdge> e;
    for (std::size_t i = 0; i < weights.size(); ++i) e.push_back({Vertex(i), Vertex(i + 1), weights[i]});
    return WeightedTree(weights.size() + 1, std::move(e));
}

}  // namespace diampart::testing
