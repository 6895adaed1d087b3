#include <gtest/gtest.h>

#include "support.hpp"
#include "tensortopsis/time_aggregation.hpp"
#include "tensortopsis/weights.hpp"

using namespace tensortopsis;
using testing_support::random_tensor;

TEST(MotivatingExample, FixtureIsConsistent) {
    // The fixture must satisfy every stated aggregate and the dominance
    // claim; checked here rather than trusted.
    const auto p = motivating_example();
    EXPECT_EQ(additive_aggregate(p, PeriodWeightMatrix::uniform(2, 2)), (std::vector<double>{4.0, 2.5}));
    const auto g = slope_mapping(p);
    EXPECT_EQ(g.samples(), 1u);
    EXPECT_EQ(additive_aggregate(g, PeriodWeightMatrix::uniform(1, 2)), (std::vector<double>{-0.25, 0.5}));
    EXPECT_TRUE(dominates(p, 0, 1));
    EXPECT_FALSE(dominates(p, 1, 0));
}

TEST(AdditiveAggregate, TwoByTwoWeightMatrix) {
    const PeriodWeightMatrix w(2, 2, {0.25, 0.25, 0.25, 0.25});
    EXPECT_EQ(additive_aggregate(motivating_example(), w), (std::vector<double>{4.0, 2.5}));
}

TEST(AdditiveAggregate, SelectorWeights) {
    std::mt19937_64 rng(41);
    const auto p = random_tensor(rng, 4, 3, 5);
    std::vector<double> v(5 * 3, 0.0);
    v[3 * 3 + 1] = 1.0;  // t = 3, j = 1
    const auto f = additive_aggregate(p, PeriodWeightMatrix(5, 3, v));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(f[i], p.at(i, 1, 3));
}

TEST(AdditiveAggregate, ShapeMismatchAndInvalidWeights) {
    EXPECT_ERROR_CODE(additive_aggregate(motivating_example(), PeriodWeightMatrix::uniform(3, 2)), ShapeMismatch);
    EXPECT_ERROR_CODE(PeriodWeightMatrix(2, 2, {0.5, 0.5, 0.5, 0.5}), WeightSumNotOne);
    EXPECT_ERROR_CODE(PeriodWeightMatrix(1, 2, {1.5, -0.5}), NegativeWeight);
    EXPECT_ERROR_CODE(PeriodWeightMatrix(2, 2, {1.0}), LengthMismatch);
}

TEST(AdditiveAggregate, LinearInTensor) {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 4, T = 1 + rng() % 6;
        const auto a = random_tensor(rng, m, n, T, -10, 10);
        const auto b = random_tensor(rng, m, n, T, -10, 10);
        Tensor3 sum = a.values();
        for (std::size_t x = 0; x < sum.size(); ++x) sum.data()[x] += b.values().data()[x];
        const DecisionTensor c(sum, a.alternative_ids(), a.criterion_ids(), a.time_labels(), a.directions());
        std::vector<double> wv(T * n);
        for (auto& x : wv) x = static_cast<double>(rng() % 100 + 1);
        const PeriodWeightMatrix w(T, n, renormalize(wv));
        const auto fa = additive_aggregate(a, w), fb = additive_aggregate(b, w), fc = additive_aggregate(c, w);
        for (std::size_t i = 0; i < m; ++i) ASSERT_NEAR(fc[i], fa[i] + fb[i], 1e-9);
    }
}

TEST(Dominates, ReflexiveAndCostAware) {
    std::mt19937_64 rng(43);
    const auto p = random_tensor(rng, 3, 2, 4);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(dominates(p, i, i));
    const DecisionTensor q(Tensor3(2, 1, 2, {1, 1, 2, 2}), {"x", "y"}, {"c"}, {"1", "2"}, {Direction::Cost});
    EXPECT_TRUE(dominates(q, 0, 1));
    EXPECT_FALSE(dominates(q, 1, 0));
    EXPECT_ERROR_CODE(dominates(q, 0, 2), IndexOutOfBounds);
}

TEST(Dominates, PreorderOnRandomInstances) {
    std::mt19937_64 rng(44);
    for (int rep = 0; rep < 300; ++rep) {
        // Small integer grids make dominance frequent enough to exercise transitivity.
        const std::size_t m = 2 + rng() % 4, n = 1 + rng() % 2, T = 1 + rng() % 2;
        Tensor3 v(m, n, T);
        for (auto& x : v.data()) x = static_cast<double>(rng() % 3);
        std::vector<Direction> dirs(n);
        for (auto& d : dirs) d = rng() % 2 ? Direction::Benefit : Direction::Cost;
        const DecisionTensor p(v, testing_support::labels("a", m), testing_support::labels("c", n),
                               testing_support::labels("t", T), dirs);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t c = 0; c < m; ++c)
                    if (dominates(p, a, b) && dominates(p, b, c)) ASSERT_TRUE(dominates(p, a, c));
    }
}

TEST(Dominates, ImpliesHigherAdditiveScore) {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> gap(0, 3);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t m = 2 + rng() % 5, n = 1 + rng() % 4, T = 1 + rng() % 6;
        auto base = random_tensor(rng, m, n, T);
        // Inject dominance of a over b.
        const std::size_t a = rng() % m;
        std::size_t b = rng() % m;
        if (b == a) b = (a + 1) % m;
        Tensor3 v = base.values();
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < T; ++t) v(a, j, t) = v(b, j, t) + gap(rng);
        const DecisionTensor p(v, base.alternative_ids(), base.criterion_ids(), base.time_labels(), base.directions());
        ASSERT_TRUE(dominates(p, a, b));
        std::vector<double> wv(T * n);
        for (auto& x : wv) x = rng() % 4 == 0 ? 0.0 : static_cast<double>(rng() % 1000 + 1);
        wv[rng() % wv.size()] += 1.0;
        const auto f = additive_aggregate(p, PeriodWeightMatrix(T, n, renormalize(wv)));
        ASSERT_GE(f[a], f[b]) << "instance " << rep;
    }
}

TEST(RankReversal, SlopeMappingFlipsPreference) {
    const auto r = rank_reversal_demo();
    EXPECT_EQ(r.time_order, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(r.feature_order, (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(r.time_scores, (std::vector<double>{4.0, 2.5}));
    EXPECT_EQ(r.feature_scores, (std::vector<double>{-0.25, 0.5}));
    EXPECT_TRUE(r.reversed);
    EXPECT_FALSE(r.time_tie);
    EXPECT_FALSE(r.feature_tie);
}

TEST(RankReversal, IdentityMappingKeepsOrder) {
    const auto r = rank_reversal_demo(motivating_example(), [](const DecisionTensor& p) { return p; });
    EXPECT_EQ(r.time_order, r.feature_order);
    EXPECT_FALSE(r.reversed);
}

TEST(RankReversal, ConstantTensorTiesInBothDomains) {
    const DecisionTensor p(Tensor3(2, 2, 3, 7.0), {"x", "y"}, {"c1", "c2"}, {"1", "2", "3"},
                           {Direction::Benefit, Direction::Benefit});
    const auto r = rank_reversal_demo(p, slope_mapping);
    EXPECT_TRUE(r.time_tie);
    EXPECT_TRUE(r.feature_tie);
    EXPECT_FALSE(r.reversed);
}
