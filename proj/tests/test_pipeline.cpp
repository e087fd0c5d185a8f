#include <gtest/gtest.h>

#include <random>

#include "diampart/diampart.hpp"
#include "test_util.hpp"

using namespace diampart;
using diampart::testing::random_coloring;
using diampart::testing::zeros;

namespace {

MatrixOracle oracle_of(const Instance& inst) { return MatrixOracle(inst.matrix()->w, inst.size()); }

void expect_certified(const Instance& inst, const PartitionResult& r, std::size_t c) {
    EXPECT_EQ(r.cardinality, c);
    EXPECT_EQ(zeros(r.coloring), c);
    EXPECT_EQ(evaluate_partition(inst, r.coloring, r.kind), r.objective);
}

}  // namespace

TEST(Pipeline, TwoVertices) {
    const Instance inst = Instance::from_matrix(2, {0, 3, 3, 0});
    const auto all = solve_diameter_all(oracle_of(inst));
    EXPECT_EQ(std::vector<ExtReal>(all.values().begin(), all.values().end()),
              (std::vector<ExtReal>{ExtReal(3.0), kNegInf, ExtReal(3.0)}));
    const auto mdcc = solve_mdcc_all(oracle_of(inst));
    EXPECT_EQ(std::vector<ExtReal>(mdcc.values().begin(), mdcc.values().end()),
              (std::vector<ExtReal>{ExtReal(3.0), kPosInf, ExtReal(3.0)}));
}

TEST(Pipeline, DegenerateSizes) {
    for (std::size_t n : {0, 1}) {
        const Instance inst = Instance::from_matrix(n, std::vector<double>(n * n, 0.0));
        const auto all = solve_all(inst, Problem::Diameter);
        for (auto v : all.values()) EXPECT_EQ(v, kNegInf);
        const auto mdcc = solve_all(inst, Problem::Mdcc);
        for (auto v : mdcc.values()) EXPECT_EQ(v, kPosInf);
        expect_certified(inst, solve(inst, Problem::Diameter, 0), 0);
    }
}

TEST(Pipeline, AdversaryFourVertices) {
    const Instance clear = make_adversary(4, {false}, Problem::Diameter);
    EXPECT_EQ(solve_diameter_all(AdversaryOracle(*clear.adversary()))[2], ExtReal(1.0));
    const Instance set = make_adversary(4, {true}, Problem::Diameter);
    const auto r = solve_diameter_single(AdversaryOracle(*set.adversary()), 2);
    EXPECT_EQ(r.objective, ExtReal(2.0));
    expect_certified(set, r, 2);
}

TEST(Pipeline, AdversaryMirroredForMdcc) {
    const std::size_t n = 8;
    const Instance all_two = make_adversary(n, std::vector<bool>(adversary_bit_count(n), true), Problem::Mdcc);
    EXPECT_EQ(solve(all_two, Problem::Mdcc, n / 2).objective, ExtReal(2.0));
    std::vector<bool> bits(adversary_bit_count(n), true);
    bits[3] = false;
    const Instance one_low = make_adversary(n, bits, Problem::Mdcc);
    const auto r = solve(one_low, Problem::Mdcc, n / 2);
    EXPECT_EQ(r.objective, ExtReal(1.0));
    expect_certified(one_low, r, n / 2);
}

TEST(Pipeline, CardinalityZeroIsWholeDiameter) {
    std::mt19937_64 rng(41);
    const Instance inst = random_matrix_instance(15, rng);
    const auto r = solve(inst, Problem::Diameter, 0);
    EXPECT_EQ(r.coloring, std::vector<std::uint8_t>(15, 1));
    EXPECT_EQ(r.objective, evaluate_partition(inst, r.coloring, ObjectiveKind::DiameterMinMax));
    EXPECT_THROW(solve(inst, Problem::Diameter, 16), ContractViolation);
    EXPECT_THROW(solve_diameter_single(oracle_of(inst), 16), ContractViolation);
}

TEST(Pipeline, MatchesEnumeration) {
    std::mt19937_64 rng(42);
    for (std::size_t n = 2; n <= 12; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            const Instance inst = random_matrix_instance(n, rng, trial % 10 == 0);
            const MatrixOracle o = oracle_of(inst);
            const auto brute_d = reference::brute_diameter_profile(o);
            const auto brute_m = reference::brute_mdcc_profile(o);
            const auto all_d = solve_diameter_all(o);
            const auto all_m = solve_mdcc_all(o);
            for (std::size_t c = 0; c <= n; ++c) {
                ASSERT_EQ(all_d[c], brute_d[c]) << "n=" << n << " c=" << c;
                ASSERT_EQ(all_m[c], brute_m[c]) << "n=" << n << " c=" << c;
                const auto sd = solve_diameter_single(o, c);
                const auto sm = solve_mdcc_single(o, c);
                EXPECT_EQ(sd.objective, brute_d[c]);
                EXPECT_EQ(sm.objective, brute_m[c]);
                expect_certified(inst, sd, c);
                expect_certified(inst, sm, c);
                expect_certified(inst, all_d.witness(c), c);
                expect_certified(inst, all_m.witness(c), c);
            }
        }
}

TEST(Pipeline, DecompositionIdentity) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 5 + trial * 2;
        const Instance inst = random_matrix_instance(n, rng, trial % 4 == 0);
        const MatrixOracle o = oracle_of(inst);
        const WeightedTree t = build_spanning_tree(o, Sense::Max);
        const ExtReal diam_chi = class_extreme(o, bipartition(t), Sense::Max);
        for (int k = 0; k < 200; ++k) {
            const auto phi = random_coloring(n, rng);
            EXPECT_EQ(evaluate_partition(o, phi, ObjectiveKind::DiameterMinMax), max(diam_chi, mono_max(t, phi)));
        }
    }
}

TEST(Pipeline, DualityAndAgreement) {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + trial * 5;
        const Instance inst = random_matrix_instance(n, rng, trial % 3 == 0);
        const MatrixOracle o = oracle_of(inst);
        const auto all_d = solve_diameter_all(o);
        const auto all_m = solve_mdcc_all(o);
        const auto neg_d = solve_diameter_all(negate_oracle(o));
        for (std::size_t c = 0; c <= n; ++c) {
            EXPECT_EQ(all_m[c], -neg_d[c]);
            EXPECT_EQ(all_d[c], solve_diameter_single(o, c).objective);
            EXPECT_EQ(all_m[c], solve_mdcc_single(o, c).objective);
            EXPECT_EQ(all_d[c], all_d[n - c]);
        }
    }
}

TEST(EuclideanFastPath, UnitSquare) {
    const Instance sq = Instance::from_points(4, 2, {0, 0, 1, 0, 1, 1, 0, 1});
    EXPECT_EQ(reference::brute_diameter_optimum(EuclideanOracle(sq.points()->coords, 4, 2), 2).objective,
              ExtReal(1.0));
    const auto r = euclidean_fast_path(*sq.points(), 2, Problem::Diameter);
    EXPECT_EQ(r.objective, ExtReal(1.0));
    expect_certified(sq, r, 2);
}

TEST(EuclideanFastPath, CollinearPrefixSplit) {
    std::vector<double> c;
    for (int i = 0; i < 10; ++i) c.insert(c.end(), {double(i), 0.0});
    const Instance line = Instance::from_points(10, 2, c);
    EXPECT_EQ(reference::brute_diameter_optimum(EuclideanOracle(line.points()->coords, 10, 2), 5).objective,
              ExtReal(4.0));
    const auto r = euclidean_fast_path(*line.points(), 5, Problem::Diameter);
    EXPECT_EQ(r.objective, ExtReal(4.0));
    expect_certified(line, r, 5);
    const auto m = euclidean_fast_path(*line.points(), 5, Problem::Mdcc);
    EXPECT_EQ(m.objective, solve(line, Problem::Mdcc, 5).objective);
    expect_certified(line, m, 5);
}

TEST(EuclideanFastPath, AgreesWithGenericRoute) {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + (trial * 13) % 90;
        const Instance pts = random_points_instance(n, 2, rng, trial % 5 == 0);
        const Instance mat = to_matrix(pts);
        for (Problem p : {Problem::Diameter, Problem::Mdcc}) {
            const auto fast_all = euclidean_fast_path_all(*pts.points(), p);
            const auto generic_all = solve_all(mat, p);
            for (std::size_t c = 0; c <= n; ++c) {
                ASSERT_EQ(fast_all[c], generic_all[c]) << "n=" << n << " c=" << c;
                ASSERT_EQ(fast_all[c], solve_all(pts, p)[c]);
            }
            const std::size_t c = n / 2;
            const auto r = euclidean_fast_path(*pts.points(), c, p);
            EXPECT_EQ(r.objective, generic_all[c]);
            expect_certified(pts, r, c);
        }
    }
}

TEST(EuclideanFastPath, OtherDimensionsFallBack) {
    std::mt19937_64 rng(46);
    const Instance pts = random_points_instance(9, 3, rng);
    for (Problem p : {Problem::Diameter, Problem::Mdcc}) {
        const auto brute = p == Problem::Diameter
                               ? reference::brute_diameter_profile(EuclideanOracle(pts.points()->coords, 9, 3))
                               : reference::brute_mdcc_profile(EuclideanOracle(pts.points()->coords, 9, 3));
        for (std::size_t c = 0; c <= 9; ++c) EXPECT_EQ(euclidean_fast_path(*pts.points(), c, p).objective, brute[c]);
    }
}
