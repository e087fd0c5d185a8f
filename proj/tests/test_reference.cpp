#include <gtest/gtest.h>

#include "diampart/diampart.hpp"
#include "test_util.hpp"

using namespace diampart;

TEST(BruteForce, TwoVertices) {
    const Instance inst = Instance::from_matrix(2, {0, 7, 7, 0});
    MatrixOracle o(inst.matrix()->w, 2);
    const auto r = reference::brute_diameter_optimum(o, 1);
    EXPECT_EQ(r.objective, kNegInf);
    EXPECT_EQ(diampart::testing::zeros(r.witness), 1u);
    EXPECT_EQ(reference::brute_diameter_optimum(o, 0).objective, ExtReal(7.0));
    EXPECT_EQ(reference::brute_mdcc_optimum(o, 1).objective, kPosInf);
    EXPECT_EQ(reference::brute_mdcc_optimum(o, 2).objective, ExtReal(7.0));
}

TEST(BruteForce, UnitSquare) {
    const Instance sq = Instance::from_points(4, 2, {0, 0, 1, 0, 1, 1, 0, 1});
    const EuclideanOracle o(sq.points()->coords, 4, 2);
    EXPECT_EQ(reference::brute_diameter_optimum(o, 2).objective, ExtReal(1.0));
    // Splitting into the two diagonals keeps the far pairs together.
    EXPECT_EQ(reference::brute_mdcc_optimum(o, 2).objective, ExtReal(std::sqrt(2.0)));
}

TEST(BruteForce, WitnessesAttainTheOptimum) {
    std::mt19937_64 rng(61);
    for (std::size_t n = 2; n <= 9; ++n) {
        const Instance inst = random_matrix_instance(n, rng, n % 2 == 0);
        MatrixOracle o(inst.matrix()->w, n);
        for (std::size_t c = 0; c <= n; ++c) {
            const auto d = reference::brute_diameter_optimum(o, c);
            const auto m = reference::brute_mdcc_optimum(o, c);
            EXPECT_EQ(diampart::testing::zeros(d.witness), c);
            EXPECT_EQ(evaluate_partition(o, d.witness, ObjectiveKind::DiameterMinMax), d.objective);
            EXPECT_EQ(evaluate_partition(o, m.witness, ObjectiveKind::DispersionMaxMin), m.objective);
        }
    }
}

TEST(BruteForce, RefusesLargeInstances) {
    std::mt19937_64 rng(62);
    const Instance inst = random_matrix_instance(15, rng);
    MatrixOracle o(inst.matrix()->w, 15);
    EXPECT_THROW(reference::brute_diameter_profile(o), BudgetExceeded);
    EXPECT_THROW(reference::brute_bottleneck_profile(random_tree(15, rng)), BudgetExceeded);
    EXPECT_NO_THROW(reference::brute_diameter_profile(o, {.max_n_exhaustive = 15}));
    EXPECT_THROW(reference::brute_spanning_extremum(o, Sense::Max), BudgetExceeded);
}

TEST(BruteSpanning, SmallCases) {
    const Instance three = Instance::from_matrix(3, {0, 1, 2, 1, 0, 3, 2, 3, 0});
    MatrixOracle o(three.matrix()->w, 3);
    EXPECT_EQ(reference::brute_spanning_extremum(o, Sense::Max), 5.0);
    EXPECT_EQ(reference::brute_spanning_extremum(o, Sense::Min), 3.0);
    const Instance two = Instance::from_matrix(2, {0, 4, 4, 0});
    EXPECT_EQ(reference::brute_spanning_extremum(MatrixOracle(two.matrix()->w, 2), Sense::Min), 4.0);
}
