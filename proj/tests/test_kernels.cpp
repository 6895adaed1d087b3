#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <vector>

#include "support.hpp"
#include "tensortopsis/hdi.hpp"
#include "tensortopsis/kernels.hpp"
#include "tensortopsis/smaa.hpp"
#include "tensortopsis/topsis.hpp"

using namespace tensortopsis;
namespace k = tensortopsis::kernels;

namespace {

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<double> random_values(std::mt19937_64& rng, std::size_t count) {
    // Mix signs, magnitudes, exact zeros and repeated values.
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> v(count);
    for (auto& x : v) {
        switch (rng() % 6) {
            case 0: x = 0.0; break;
            case 1: x = -0.0; break;
            case 2: x = 1.5; break;
            default: x = u(rng) * std::ldexp(1.0, static_cast<int>(rng() % 40) - 20);
        }
    }
    return v;
}

class KernelEquivalence : public ::testing::Test {
protected:
    void SetUp() override {
        if (!k::supported(k::Isa::Avx2)) GTEST_SKIP() << "AVX2 kernels not available on this machine";
    }
    const k::KernelTable& scalar = k::scalar_table();
    const k::KernelTable& simd() { return k::table_for(k::Isa::Avx2); }
};

class IsaGuard {
public:
    IsaGuard() : saved_(k::active().isa) {}
    ~IsaGuard() { k::set_active(saved_); }

private:
    k::Isa saved_;
};

}  // namespace

TEST(KernelDispatch, ScalarAlwaysAvailable) {
    EXPECT_TRUE(k::supported(k::Isa::Scalar));
    EXPECT_EQ(k::table_for(k::Isa::Scalar).isa, k::Isa::Scalar);
    EXPECT_EQ(k::to_string(k::Isa::Avx2), "avx2");
    if (!k::supported(k::Isa::Avx2)) EXPECT_ERROR_CODE(k::table_for(k::Isa::Avx2), InvalidArgument);
    EXPECT_TRUE(k::supported(k::best_supported()));
}

TEST_F(KernelEquivalence, ScaleColumns) {
    std::mt19937_64 rng(21);
    for (std::size_t rows = 1; rows <= 9; ++rows)
        for (std::size_t cols = 1; cols <= 19; ++cols) {
            const auto src = random_values(rng, rows * cols);
            const auto f = random_values(rng, cols);
            std::vector<double> a(rows * cols), b(rows * cols);
            scalar.scale_columns(src.data(), f.data(), a.data(), rows, cols);
            simd().scale_columns(src.data(), f.data(), b.data(), rows, cols);
            ASSERT_TRUE(same_bits(a, b)) << rows << "x" << cols;
        }
}

TEST_F(KernelEquivalence, ColumnExtrema) {
    std::mt19937_64 rng(22);
    for (std::size_t rows = 1; rows <= 9; ++rows)
        for (std::size_t cols = 1; cols <= 19; ++cols) {
            const auto src = random_values(rng, rows * cols);
            std::vector<double> amin(cols), amax(cols), bmin(cols), bmax(cols);
            scalar.column_extrema(src.data(), rows, cols, amin.data(), amax.data());
            simd().column_extrema(src.data(), rows, cols, bmin.data(), bmax.data());
            ASSERT_TRUE(same_bits(amin, bmin)) << rows << "x" << cols;
            ASSERT_TRUE(same_bits(amax, bmax)) << rows << "x" << cols;
        }
}

TEST_F(KernelEquivalence, ColumnSumSquares) {
    std::mt19937_64 rng(23);
    for (std::size_t rows = 1; rows <= 9; ++rows)
        for (std::size_t cols = 1; cols <= 19; ++cols) {
            const auto src = random_values(rng, rows * cols);
            std::vector<double> a(cols), b(cols);
            scalar.column_sum_squares(src.data(), rows, cols, a.data());
            simd().column_sum_squares(src.data(), rows, cols, b.data());
            ASSERT_TRUE(same_bits(a, b)) << rows << "x" << cols;
        }
}

TEST_F(KernelEquivalence, RowSquaredDistances) {
    std::mt19937_64 rng(24);
    for (std::size_t rows = 1; rows <= 13; ++rows)
        for (std::size_t cols = 1; cols <= 17; ++cols) {
            const auto src = random_values(rng, rows * cols);
            const auto pos = random_values(rng, cols);
            const auto neg = random_values(rng, cols);
            std::vector<double> ap(rows), am(rows), bp(rows), bm(rows);
            scalar.row_sq_distances(src.data(), rows, cols, pos.data(), neg.data(), ap.data(), am.data());
            simd().row_sq_distances(src.data(), rows, cols, pos.data(), neg.data(), bp.data(), bm.data());
            ASSERT_TRUE(same_bits(ap, bp)) << rows << "x" << cols;
            ASSERT_TRUE(same_bits(am, bm)) << rows << "x" << cols;
        }
}

TEST_F(KernelEquivalence, RankingAndSmaaIdenticalAcrossIsas) {
    IsaGuard guard;
    const FeatureRegistry registry;
    const std::vector<std::string> names(hdi::kFeatureNames.begin(), hdi::kFeatureNames.end());
    const auto kinds = registry.resolve(names);
    const auto s = extract(hdi::panel(), kinds);
    const WeightScheme scheme{hdi::criterion_weights(), std::vector<double>{0.55, 0.15, 0.15, 0.15}};
    SmaaOptions opt;
    opt.iterations = 2000;
    opt.seed = 99;

    k::set_active(k::Isa::Scalar);
    const auto r_scalar = rank(s, scheme, {.keep_audit = true});
    const auto m_scalar = run_smaa(s, scheme.criterion_weights, FeatureWeightSampler::strategy5(), opt);
    k::set_active(k::Isa::Avx2);
    const auto r_simd = rank(s, scheme, {.keep_audit = true});
    const auto m_simd = run_smaa(s, scheme.criterion_weights, FeatureWeightSampler::strategy5(), opt);

    EXPECT_TRUE(same_bits(r_scalar.closeness, r_simd.closeness));
    EXPECT_EQ(r_scalar.order, r_simd.order);
    EXPECT_TRUE(same_bits(r_scalar.audit->distances.plus, r_simd.audit->distances.plus));
    EXPECT_EQ(m_scalar.counts, m_simd.counts);
}

TEST_F(KernelEquivalence, RandomTensorsRankIdentically) {
    IsaGuard guard;
    std::mt19937_64 rng(25);
    const FeatureKind kinds[] = {FeatureKind::current(), FeatureKind::average(), FeatureKind::coefficient_of_variation(),
                                 FeatureKind::slope()};
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t m = 1 + rng() % 12, n = 1 + rng() % 6;
        std::vector<Direction> dirs(n);
        for (auto& d : dirs) d = rng() % 2 ? Direction::Benefit : Direction::Cost;
        const auto p = testing_support::random_tensor(rng, m, n, 2 + rng() % 5, 1, 20, dirs);
        const auto s = extract(p, kinds);
        std::vector<double> w(n, 1.0), a(4);
        for (auto& x : w) x = 0.1 + static_cast<double>(rng() % 100);
        for (auto& x : a) x = static_cast<double>(rng() % 10);
        a[0] += 1;
        const WeightScheme scheme{renormalize(w), renormalize(a)};
        k::set_active(k::Isa::Scalar);
        const auto x = rank(s, scheme);
        k::set_active(k::Isa::Avx2);
        const auto y = rank(s, scheme);
        ASSERT_TRUE(same_bits(x.closeness, y.closeness));
    }
}
