#include <gtest/gtest.h>

#include <random>
#include <set>

#include "diampart/diampart.hpp"
#include "test_util.hpp"

using namespace diampart;
using diampart::testing::path_tree;

namespace {

std::set<std::size_t> enumerate_sums(const std::vector<SidePair>& items) {
    std::set<std::size_t> sums;
    for (std::uint32_t mask = 0; mask < (1u << items.size()); ++mask) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < items.size(); ++i) s += (mask >> i) & 1u ? items[i].first : items[i].second;
        sums.insert(s);
    }
    return sums;
}

}  // namespace

TEST(SubsetSum, UnitItems) {
    const std::vector<SidePair> items(6, {1, 0});
    for (std::size_t t = 0; t <= 8; ++t) EXPECT_EQ(subset_sum_reachable(items, t), t <= 6) << t;
}

TEST(SubsetSum, TwoComponents) {
    const std::vector<SidePair> items{{2, 1}, {3, 2}};
    EXPECT_EQ(enumerate_sums(items), (std::set<std::size_t>{3, 4, 5}));
    for (std::size_t t = 0; t <= 6; ++t) EXPECT_EQ(subset_sum_reachable(items, t), t >= 3 && t <= 5);
}

TEST(SubsetSum, MatchesEnumeration) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<SidePair> items;
        const std::size_t m = 1 + trial % 20;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t b = rng() % 4, a = b + rng() % 4;
            items.emplace_back(a == 0 ? 1 : a, b);
        }
        const auto sums = enumerate_sums(items);
        std::size_t width = 0;
        for (auto [a, b] : items) width += a;
        for (std::size_t t = 0; t <= width + 1; ++t) {
            EXPECT_EQ(subset_sum_reachable(items, t), sums.count(t) == 1);
            const auto w = subset_sum_witness(items, t);
            ASSERT_EQ(w.has_value(), sums.count(t) == 1);
            if (w) {
                std::size_t s = 0;
                for (std::size_t i = 0; i < m; ++i) s += (*w)[i] ? items[i].first : items[i].second;
                EXPECT_EQ(s, t);
            }
        }
    }
}

TEST(Feasible, Examples) {
    const WeightedTree t = path_tree({5, 3});
    for (std::size_t c = 0; c <= 3; ++c) EXPECT_TRUE(feasible(t, 5.0, c));
    // lambda = 4 keeps only edge ab: components (1,1) and the isolated c.
    const ComponentSummary s = summarize_forest(t, 4.0);
    EXPECT_EQ(s.items, (std::vector<SidePair>{{1, 1}, {1, 0}}));
    EXPECT_TRUE(feasible(t, 4.0, 1));
    EXPECT_FALSE(feasible(t, 4.0, 0));
}

TEST(Feasible, MonotoneInLambda) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const WeightedTree t = random_tree(2 + trial % 40, rng, trial % 2 == 0);
        std::vector<double> lambdas;
        for (const auto& e : t.edges()) lambdas.push_back(e.weight);
        std::sort(lambdas.begin(), lambdas.end());
        for (std::size_t c = 0; c <= t.size(); ++c) {
            bool seen = false;
            for (double l : lambdas) {
                const bool f = feasible(t, l, c);
                if (seen) { EXPECT_TRUE(f); }
                seen = seen || f;
            }
        }
    }
}

TEST(SolveSingle, PathExample) {
    const WeightedTree t = path_tree({5, 3});
    EXPECT_EQ(solve_single(t, 1), kNegInf);
    EXPECT_EQ(solve_single(t, 0), ExtReal(5.0));
    EXPECT_THROW(solve_single(t, 4), ContractViolation);
}

TEST(SolveSingle, AgreesWithDpAndBoundaryFeasibility) {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + (trial * 37) % 200;
        const WeightedTree t = random_tree(n, rng, trial % 3 == 0);
        const auto profile = solve_all_cardinalities(t).profile;
        const auto cand = [&] {
            std::vector<double> w;
            for (const auto& e : t.edges()) w.push_back(e.weight);
            std::sort(w.begin(), w.end());
            return w;
        }();
        for (std::size_t c = 0; c <= n; ++c) {
            const auto r = solve_single_with_witness(t, c);
            ASSERT_EQ(r.value, profile[c]) << "n=" << n << " c=" << c;
            EXPECT_EQ(r.value, solve_single(t, n - c));
            EXPECT_EQ(diampart::testing::zeros(r.coloring), c);
            EXPECT_EQ(mono_max(t, r.coloring), r.value);
            if (r.value.is_finite()) {
                EXPECT_TRUE(feasible(t, r.value.value(), c));
                auto below = std::lower_bound(cand.begin(), cand.end(), r.value.value());
                if (below != cand.begin()) { EXPECT_FALSE(feasible(t, *std::prev(below), c)); }
            }
        }
    }
}
