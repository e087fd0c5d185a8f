#pragma once

// Dense Prim spanning trees over a weight oracle, the tree's proper 2-coloring,
// and per-class extreme pair weights.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <span>
#include <vector>

#include "errors.hpp"
#include "ext_real.hpp"
#include "oracle.hpp"

namespace diampart {

enum class Sense { Max, Min };

struct TreeEdge {
    Vertex u = 0;
    Vertex v = 0;
    double weight = 0;

    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

}  // namespace detail

/// Spanning tree on vertices 0..n-1, edges kept in insertion order.
class WeightedTree {
public:
    WeightedTree() = default;

    /// Validates that `edges` form a spanning tree on n vertices.
    WeightedTree(std::size_t n, std::vector<TreeEdge> edges) : n_(n), edges_(std::move(edges)) {
        detail::require(edges_.size() == (n_ == 0 ? 0 : n_ - 1), "WeightedTree: a tree on n vertices has n-1 edges");
        detail::DisjointSets dsu(n_);
        for (const auto& e : edges_) {
            detail::require(e.u < n_ && e.v < n_, "WeightedTree: endpoint out of range");
            detail::require(e.u != e.v, "WeightedTree: self loop");
            detail::require(dsu.unite(e.u, e.v), "WeightedTree: edges contain a cycle");
        }
    }

    std::size_t size() const noexcept { return n_; }
    std::span<const TreeEdge> edges() const noexcept { return edges_; }

    ExtReal max_edge_weight() const {
        ExtReal m = kNegInf;
        for (const auto& e : edges_) m = max(m, ExtReal(e.weight));
        return m;
    }

    /// Same tree with every edge weight negated.
    WeightedTree negated() const {
        WeightedTree t = *this;
        for (auto& e : t.edges_) e.weight = -e.weight;
        return t;
    }

private:
    std::size_t n_ = 0;
    std::vector<TreeEdge> edges_;
};

/// Rooted orientation of a WeightedTree. Children of each vertex are listed in
/// the order their edges appear in the tree's edge list.
struct RootedTree {
    Vertex root = 0;
    std::vector<Vertex> parent;          // parent[root] == root
    std::vector<double> parent_weight;   // weight of edge to parent; unused at root
    std::vector<Vertex> order;           // BFS order from root
    std::vector<std::size_t> child_begin;  // CSR offsets, size n+1
    std::vector<Vertex> children;

    std::span<const Vertex> children_of(Vertex u) const {
        return {children.data() + child_begin[u], child_begin[u + 1] - child_begin[u]};
    }
};

inline RootedTree root_tree(const WeightedTree& tree, Vertex root = 0) {
    const std::size_t n = tree.size();
    RootedTree rt;
    rt.root = root;
    if (n == 0) {
        rt.child_begin.assign(1, 0);
        return rt;
    }
    detail::require(root < n, "root_tree: root out of range");

    // Undirected adjacency in edge order (CSR), each entry (neighbor, weight).
    std::vector<std::size_t> deg(n + 1, 0);
    for (const auto& e : tree.edges()) {
        ++deg[e.u + 1];
        ++deg[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) deg[i + 1] += deg[i];
    std::vector<std::pair<Vertex, double>> adj(deg[n]);
    std::vector<std::size_t> fill(deg.begin(), deg.end() - 1);
    for (const auto& e : tree.edges()) {
        adj[fill[e.u]++] = {e.v, e.weight};
        adj[fill[e.v]++] = {e.u, e.weight};
    }

    rt.parent.assign(n, root);
    rt.parent_weight.assign(n, 0.0);
    rt.order.reserve(n);
    std::vector<bool> seen(n, false);
    seen[root] = true;
    rt.order.push_back(root);
    for (std::size_t head = 0; head < rt.order.size(); ++head) {
        const Vertex u = rt.order[head];
        for (std::size_t k = deg[u]; k < deg[u + 1]; ++k) {
            const auto [v, w] = adj[k];
            if (seen[v]) continue;
            seen[v] = true;
            rt.parent[v] = u;
            rt.parent_weight[v] = w;
            rt.order.push_back(v);
        }
    }

    rt.child_begin.assign(n + 1, 0);
    for (Vertex v = 0; v < n; ++v)
        if (v != root) ++rt.child_begin[rt.parent[v] + 1];
    for (std::size_t i = 0; i < n; ++i) rt.child_begin[i + 1] += rt.child_begin[i];
    rt.children.resize(n - 1);
    std::vector<std::size_t> pos(rt.child_begin.begin(), rt.child_begin.end() - 1);
    // Walking the edge list keeps each child list in edge order.
    for (const auto& e : tree.edges()) {
        const Vertex child = rt.parent[e.v] == e.u && e.v != root ? e.v : e.u;
        rt.children[pos[rt.parent[child]]++] = child;
    }
    return rt;
}

/// Dense Prim, O(n^2). Starts at vertex 0; each pair is read at most once, so
/// the oracle sees at most n(n-1)/2 queries. Ties prefer the smallest candidate
/// vertex, then the smallest attaching endpoint.
template <WeightOracle O>
WeightedTree build_spanning_tree(const O& oracle, Sense sense) {
    const std::size_t n = oracle.size();
    if (n <= 1) return WeightedTree(n, {});

    const bool maximize = sense == Sense::Max;
    auto better = [maximize](double a, double b) { return maximize ? a > b : a < b; };

    std::vector<bool> in_tree(n, false);
    std::vector<double> key(n, 0.0);
    std::vector<Vertex> attach(n, 0);
    std::vector<TreeEdge> edges;
    edges.reserve(n - 1);

    in_tree[0] = true;
    for (Vertex v = 1; v < n; ++v) key[v] = oracle.weight(0, v);

    for (std::size_t step = 1; step < n; ++step) {
        Vertex pick = 0;
        bool found = false;
        for (Vertex v = 1; v < n; ++v) {
            if (in_tree[v]) continue;
            if (!found || better(key[v], key[pick])) {
                pick = v;
                found = true;
            }
        }
        in_tree[pick] = true;
        edges.push_back({attach[pick], pick, key[pick]});
        for (Vertex v = 1; v < n; ++v) {
            if (in_tree[v]) continue;
            const double w = oracle.weight(pick, v);
            if (better(w, key[v]) || (w == key[v] && pick < attach[v])) {
                key[v] = w;
                attach[v] = pick;
            }
        }
    }
    return WeightedTree(n, std::move(edges));
}

/// A 2-coloring of the vertices; `size0` counts color-0 vertices.
struct Bipartition {
    std::vector<std::uint8_t> color;
    std::size_t size0 = 0;

    std::size_t size() const noexcept { return color.size(); }
    std::size_t size1() const noexcept { return color.size() - size0; }
};

inline Bipartition make_bipartition(std::vector<std::uint8_t> color) {
    Bipartition b;
    b.size0 = 0;
    for (auto c : color) {
        detail::require(c <= 1, "Bipartition: colors must be 0 or 1");
        b.size0 += c == 0;
    }
    b.color = std::move(color);
    return b;
}

/// Proper 2-coloring of the tree by BFS from vertex 0, which gets color 0.
inline Bipartition bipartition(const WeightedTree& tree) {
    const std::size_t n = tree.size();
    std::vector<std::uint8_t> color(n, 0);
    if (n > 0) {
        const RootedTree rt = root_tree(tree, 0);
        for (std::size_t k = 1; k < rt.order.size(); ++k) {
            const Vertex v = rt.order[k];
            color[v] = color[rt.parent[v]] ^ 1;
        }
    }
    return make_bipartition(std::move(color));
}

/// Max (Sense::Max) or min (Sense::Min) weight over same-class pairs, by a
/// direct O(n^2) scan. -inf / +inf when no same-class pair exists.
template <WeightOracle O>
ExtReal class_extreme(const O& oracle, const Bipartition& part, Sense sense) {
    const std::size_t n = oracle.size();
    detail::require(part.size() == n, "class_extreme: partition size differs from oracle size");
    const bool maximize = sense == Sense::Max;
    ExtReal best = maximize ? kNegInf : kPosInf;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (part.color[u] != part.color[v]) continue;
            const ExtReal w(oracle.weight(u, v));
            best = maximize ? max(best, w) : min(best, w);
        }
    }
    return best;
}

/// Debug dump: one `u v w` line per edge, in insertion order.
inline void write_tree(std::ostream& out, const WeightedTree& tree) {
    for (const auto& e : tree.edges()) out << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
}

}  // namespace diampart
