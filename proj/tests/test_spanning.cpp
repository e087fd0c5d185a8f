#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "diampart/diampart.hpp"
#include "test_util.hpp"

using namespace diampart;
using diampart::testing::kruskal_edges;
using diampart::testing::sorted_edges;
using diampart::testing::total_weight;

TEST(SpanningTree, TwoVerticesBothSenses) {
    const Instance inst = Instance::from_matrix(2, {0, 5, 5, 0});
    MatrixOracle o(inst.matrix()->w, 2);
    for (Sense s : {Sense::Max, Sense::Min}) {
        const WeightedTree t = build_spanning_tree(o, s);
        ASSERT_EQ(t.edges().size(), 1u);
        EXPECT_EQ(t.edges()[0], (TreeEdge{0, 1, 5}));
    }
}

TEST(SpanningTree, DegenerateSizes) {
    const Instance one = Instance::from_matrix(1, {0});
    EXPECT_TRUE(build_spanning_tree(MatrixOracle(one.matrix()->w, 1), Sense::Max).edges().empty());
    EXPECT_EQ(build_spanning_tree(MatrixOracle({}, 0), Sense::Max).size(), 0u);
}

TEST(SpanningTree, ExtremalOverAllTreesOfSixVertices) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const Instance inst = random_matrix_instance(6, rng, trial % 2 == 1);
        MatrixOracle o(inst.matrix()->w, 6);
        // Totals are compared exactly: both sides sum the same five doubles,
        // but possibly in a different order, so allow one rounding step.
        EXPECT_NEAR(total_weight(build_spanning_tree(o, Sense::Max)), reference::brute_spanning_extremum(o, Sense::Max),
                    1e-12);
        EXPECT_NEAR(total_weight(build_spanning_tree(o, Sense::Min)), reference::brute_spanning_extremum(o, Sense::Min),
                    1e-12);
    }
}

TEST(SpanningTree, MatchesKruskalOnDistinctWeights) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 30;
        const Instance inst = random_matrix_instance(n, rng);
        MatrixOracle o(inst.matrix()->w, n);
        for (Sense s : {Sense::Max, Sense::Min}) {
            auto expect = kruskal_edges(o, s);
            for (auto& [w, u, v] : expect)
                if (u > v) std::swap(u, v);
            std::sort(expect.begin(), expect.end());
            EXPECT_EQ(sorted_edges(build_spanning_tree(o, s)), expect);
        }
    }
}

TEST(SpanningTree, BottleneckPathProperty) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 9;
        const Instance inst = random_matrix_instance(n, rng, trial % 4 == 0);
        MatrixOracle o(inst.matrix()->w, n);
        for (Sense s : {Sense::Max, Sense::Min}) {
            const WeightedTree t = build_spanning_tree(o, s);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    for (const auto& e : diampart::testing::tree_path(t, u, v)) {
                        if (s == Sense::Max) { EXPECT_GE(e.weight, o.weight(u, v)); }
                        else EXPECT_LE(e.weight, o.weight(u, v));
                    }
        }
    }
}

TEST(SpanningTree, QueryBudget) {
    std::mt19937_64 rng(9);
    for (std::size_t n : {0, 1, 2, 3, 10, 57, 200}) {
        const Instance inst = random_matrix_instance(n, rng);
        MatrixOracle m(inst.matrix()->w, n);
        CountingOracle o(m);
        build_spanning_tree(o, Sense::Max);
        EXPECT_LE(o.queries(), n * (n - (n > 0)) / 2);
    }
}

TEST(SpanningTree, RejectsNonTrees) {
    EXPECT_THROW(WeightedTree(3, {{0, 1, 1}}), ContractViolation);
    EXPECT_THROW(WeightedTree(3, {{0, 1, 1}, {1, 0, 2}}), ContractViolation);
    EXPECT_THROW(WeightedTree(3, {{0, 1, 1}, {1, 3, 2}}), ContractViolation);
    EXPECT_THROW(WeightedTree(2, {{1, 1, 1}}), ContractViolation);
}

TEST(SpanningTree, DumpFormat) {
    std::ostringstream out;
    write_tree(out, WeightedTree(3, {{0, 1, 2.5}, {2, 1, 1}}));
    EXPECT_EQ(out.str(), "0 1 2.5\n2 1 1\n");
}

TEST(Bipartition, PathAndStar) {
    const Bipartition p = bipartition(diampart::testing::path_tree({1, 1}));
    EXPECT_EQ(p.color, (std::vector<std::uint8_t>{0, 1, 0}));
    EXPECT_EQ(p.size0, 2u);

    const Bipartition s = bipartition(WeightedTree(4, {{0, 1, 1}, {0, 2, 1}, {3, 0, 1}}));
    EXPECT_EQ(s.color, (std::vector<std::uint8_t>{0, 1, 1, 1}));
    EXPECT_EQ(s.size0, 1u);
}

TEST(Bipartition, AlwaysProper) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        const WeightedTree t = random_tree(50, rng);
        const Bipartition b = bipartition(t);
        for (const auto& e : t.edges()) EXPECT_NE(b.color[e.u], b.color[e.v]);
        EXPECT_EQ(b.size0, diampart::testing::zeros(b.color));
    }
}

TEST(ClassExtreme, SmallCases) {
    const Instance two = Instance::from_matrix(2, {0, 3, 3, 0});
    MatrixOracle o2(two.matrix()->w, 2);
    EXPECT_EQ(class_extreme(o2, make_bipartition({0, 1}), Sense::Max), kNegInf);
    EXPECT_EQ(class_extreme(o2, make_bipartition({0, 1}), Sense::Min), kPosInf);

    // classes {a, b}, {c} with w(a,b) = 4
    const Instance three = Instance::from_matrix(3, {0, 4, 9, 4, 0, 8, 9, 8, 0});
    MatrixOracle o3(three.matrix()->w, 3);
    EXPECT_EQ(class_extreme(o3, make_bipartition({0, 0, 1}), Sense::Max), ExtReal(4.0));
    EXPECT_EQ(class_extreme(o3, make_bipartition({0, 0, 1}), Sense::Min), ExtReal(4.0));
}

TEST(ClassExtreme, MatchesDirectScan) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Instance inst = random_matrix_instance(30, rng);
        MatrixOracle o(inst.matrix()->w, 30);
        const auto color = diampart::testing::random_coloring(30, rng);
        double hi = -std::numeric_limits<double>::infinity();
        double lo = std::numeric_limits<double>::infinity();
        for (Vertex u = 0; u < 30; ++u)
            for (Vertex v = 0; v < 30; ++v)
                if (u != v && color[u] == color[v]) {
                    hi = std::max(hi, o.weight(u, v));
                    lo = std::min(lo, o.weight(u, v));
                }
        EXPECT_EQ(class_extreme(o, make_bipartition(color), Sense::Max), ExtReal(hi));
        EXPECT_EQ(class_extreme(o, make_bipartition(color), Sense::Min), ExtReal(lo));
    }
}
