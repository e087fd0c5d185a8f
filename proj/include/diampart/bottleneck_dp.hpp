#pragma once

// Bottleneck tree 2-coloring for every cardinality at once.
//
// For a tree T and a 2-coloring phi, M(phi) is the heaviest tree edge whose
// endpoints share a color (-inf if none). The solver computes
//     M*(c) = min { M(phi) : phi has exactly c vertices of color 0 }
// for all c in 0..n in O(n^2), by folding children one at a time into a
// running table indexed by the number of color-0 vertices. The cost of one
// fold is |running| * |child subtree|, i.e. the vertex pairs whose lowest
// common ancestor is the current vertex, so the total is exactly n(n-1)/2.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ext_real.hpp"
#include "spanning.hpp"

namespace diampart {

/// M*(c) for c = 0..n.
struct CardinalityProfile {
    std::vector<ExtReal> values;

    std::size_t size() const noexcept { return values.size(); }
    ExtReal operator[](std::size_t c) const { return values.at(c); }

    friend bool operator==(const CardinalityProfile&, const CardinalityProfile&) = default;
};

/// TSV lines `c<TAB>value`, with `-inf` / `+inf` sentinels.
inline void write_profile(std::ostream& out, std::span<const ExtReal> values) {
    for (std::size_t c = 0; c < values.size(); ++c) out << c << '\t' << to_string(values[c]) << '\n';
}

/// Heaviest monochromatic tree edge; -inf if every edge is bichromatic.
inline ExtReal mono_max(const WeightedTree& tree, std::span<const std::uint8_t> coloring) {
    detail::require(coloring.size() == tree.size(), "mono_max: coloring length differs from tree size");
    ExtReal m = kNegInf;
    for (const auto& e : tree.edges())
        if (coloring[e.u] == coloring[e.v]) m = max(m, ExtReal(e.weight));
    return m;
}

/// Argmin choices recorded while folding, enough to rebuild an optimal
/// coloring for any c in O(n).
class ChoiceLog {
public:
    struct Absorption {
        Vertex owner = 0;
        Vertex child = 0;
        std::uint32_t size_before = 0;  // vertices in the running table before the fold
        std::uint32_t size_after = 0;
        std::size_t offset = 0;         // into choices_: 2 rows of size_after + 1
    };

    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    std::size_t vertex_count() const noexcept { return n_; }
    std::span<const Absorption> absorptions() const noexcept { return absorptions_; }

    /// Logged (q1, g) for the running table of `a` at color b and count Q.
    /// Returns false when that entry was infeasible.
    bool choice(const Absorption& a, int b, std::size_t q, std::uint32_t& q1, int& g) const {
        const std::uint32_t code = choices_[a.offset + std::size_t(b) * (a.size_after + 1) + q];
        if (code == kNone) return false;
        q1 = code >> 1;
        g = int(code & 1u);
        return true;
    }

    /// Stored argmin records, counting one per (absorption, Q) for both colors.
    std::size_t entry_count() const noexcept { return choices_.size() / 2; }

private:
    friend struct BottleneckSolver;
    friend std::vector<std::uint8_t> reconstruct(const WeightedTree&, const ChoiceLog&, std::size_t);

    std::size_t n_ = 0;
    Vertex root_ = 0;
    std::vector<Absorption> absorptions_;
    std::vector<std::size_t> abs_begin_;   // per owner, CSR over absorptions_
    std::vector<std::uint32_t> choices_;
    std::vector<std::uint8_t> root_color_;  // per c: color of the root in the chosen optimum
};

struct BottleneckSolution {
    CardinalityProfile profile;
    ChoiceLog log;
    /// Sum over folds of |running table| * |child subtree|; equals n(n-1)/2.
    std::uint64_t pair_visits = 0;
};

struct BottleneckSolver {
    struct Table {
        std::uint32_t size = 0;  // vertices represented
        std::vector<double> row[2];
    };

    static Table single_vertex() {
        constexpr double inf = std::numeric_limits<double>::infinity();
        Table t;
        t.size = 1;
        t.row[0] = {inf, -inf};
        t.row[1] = {-inf, inf};
        return t;
    }

    static BottleneckSolution solve(const WeightedTree& tree) {
        constexpr double inf = std::numeric_limits<double>::infinity();
        const std::size_t n = tree.size();
        BottleneckSolution out;
        ChoiceLog& log = out.log;
        log.n_ = n;
        if (n == 0) {
            out.profile.values = {kNegInf};
            log.abs_begin_.assign(1, 0);
            log.root_color_ = {0};
            return out;
        }

        const RootedTree rt = root_tree(tree, 0);
        log.root_ = rt.root;
        log.abs_begin_.assign(n + 1, 0);
        log.absorptions_.reserve(n - 1);

        // Absorptions of one owner are contiguous; owners are visited in reverse
        // BFS order, so index them afterwards through abs_begin_.
        std::vector<std::pair<std::size_t, std::size_t>> range(n, {0, 0});
        std::vector<Table> tables(n);

        for (std::size_t k = n; k-- > 0;) {
            const Vertex u = rt.order[k];
            Table run = single_vertex();
            const std::size_t first = log.absorptions_.size();
            for (const Vertex v : rt.children_of(u)) {
                Table child = std::move(tables[v]);
                const double w = rt.parent_weight[v];
                const std::uint32_t s = run.size, t = child.size;

                Table next;
                next.size = s + t;
                next.row[0].assign(next.size + 1, inf);
                next.row[1].assign(next.size + 1, inf);

                ChoiceLog::Absorption rec{u, v, s, next.size, log.choices_.size()};
                log.choices_.resize(rec.offset + 2 * std::size_t(next.size + 1), ChoiceLog::kNone);

                for (int b = 0; b < 2; ++b) {
                    const double* r = run.row[b].data();
                    double* dst = next.row[b].data();
                    std::uint32_t* ch = log.choices_.data() + rec.offset + std::size_t(b) * (next.size + 1);
                    // Color-0 owner contributes one zero, so its feasible counts start at 1.
                    const std::uint32_t q1_lo = b == 0 ? 1 : 0, q1_hi = b == 0 ? s : s - 1;
                    for (int g = 0; g < 2; ++g) {
                        const double* d = child.row[g].data();
                        const std::uint32_t q2_lo = g == 0 ? 1 : 0, q2_hi = g == 0 ? t : t - 1;
                        const double edge = b == g ? w : -inf;
                        for (std::uint32_t q1 = q1_lo; q1 <= q1_hi; ++q1) {
                            const double base = r[q1] < edge ? edge : r[q1];
                            const std::uint32_t code = q1 * 2 + std::uint32_t(g);
                            for (std::uint32_t q2 = q2_lo; q2 <= q2_hi; ++q2) {
                                const double val = base < d[q2] ? d[q2] : base;
                                const std::uint32_t q = q1 + q2;
                                // Strict: ties keep the smallest g, then the smallest q1.
                                if (val < dst[q]) {
                                    dst[q] = val;
                                    ch[q] = code;
                                }
                            }
                        }
                    }
                }
                out.pair_visits += std::uint64_t(s) * t;
                log.absorptions_.push_back(rec);
                run = std::move(next);
            }
            range[u] = {first, log.absorptions_.size()};
            tables[u] = std::move(run);
        }

        // Re-lay absorptions grouped by owner id for O(1) lookup.
        std::vector<ChoiceLog::Absorption> grouped;
        grouped.reserve(log.absorptions_.size());
        for (Vertex u = 0; u < n; ++u) {
            log.abs_begin_[u] = grouped.size();
            for (std::size_t i = range[u].first; i < range[u].second; ++i) grouped.push_back(log.absorptions_[i]);
        }
        log.abs_begin_[n] = grouped.size();
        log.absorptions_ = std::move(grouped);

        const Table& root = tables[rt.root];
        out.profile.values.resize(n + 1);
        log.root_color_.resize(n + 1);
        for (std::size_t c = 0; c <= n; ++c) {
            const double d0 = root.row[0][c], d1 = root.row[1][c];
            log.root_color_[c] = d1 < d0 ? 1 : 0;
            out.profile.values[c] = ExtReal(d1 < d0 ? d1 : d0);
        }
        return out;
    }
};

inline BottleneckSolution solve_all_cardinalities(const WeightedTree& tree) { return BottleneckSolver::solve(tree); }

/// Optimal coloring with exactly c zeros, unwinding the logged folds from the root.
inline std::vector<std::uint8_t> reconstruct(const WeightedTree& tree, const ChoiceLog& log, std::size_t c) {
    const std::size_t n = log.n_;
    detail::require(tree.size() == n, "reconstruct: log was built for a different tree");
    detail::require(c <= n, "reconstruct: cardinality out of range");
    std::vector<std::uint8_t> color(n, 0);
    if (n == 0) return color;

    struct Frame {
        Vertex u;
        int b;
        std::size_t q;
    };
    std::vector<Frame> stack{{log.root_, log.root_color_[c], c}};
    while (!stack.empty()) {
        auto [u, b, q] = stack.back();
        stack.pop_back();
        for (std::size_t k = log.abs_begin_[u + 1]; k-- > log.abs_begin_[u];) {
            const auto& a = log.absorptions_[k];
            std::uint32_t q1 = 0;
            int g = 0;
            if (!log.choice(a, b, q, q1, g)) throw ContractViolation("reconstruct: reached an infeasible table entry");
            stack.push_back({a.child, g, q - q1});
            q = q1;
        }
        if (q != (b == 0 ? 1u : 0u)) throw ContractViolation("reconstruct: inconsistent choice log");
        color[u] = std::uint8_t(b);
    }
    return color;
}

}  // namespace diampart
