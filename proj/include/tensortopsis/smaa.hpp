#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tensortopsis/error.hpp"
#include "tensortopsis/features.hpp"
#include "tensortopsis/topsis.hpp"
#include "tensortopsis/weights.hpp"

namespace tensortopsis {

/// Consecutive rejected draws tolerated before sample_alpha gives up.
inline constexpr std::size_t kMaxConsecutiveRejections = 1000;

/// One sampling spec per feature weight. With a Remainder entry every draw
/// closes the simplex by construction; without one, draws are divided by
/// their sum.
class FeatureWeightSampler {
public:
    explicit FeatureWeightSampler(std::vector<AlphaSpec> specs);

    /// alpha_1 = 1 - (alpha_2 + alpha_3 + alpha_4), alpha_2..4 ~ U[0.1, 0.2].
    static FeatureWeightSampler strategy5();

    /// Point mass on a fixed vector.
    static FeatureWeightSampler fixed(std::span<const double> alpha);

    [[nodiscard]] const std::vector<AlphaSpec>& specs() const noexcept { return specs_; }
    [[nodiscard]] std::size_t size() const noexcept { return specs_.size(); }
    [[nodiscard]] bool has_remainder() const noexcept { return remainder_ < specs_.size(); }

private:
    std::vector<AlphaSpec> specs_;
    std::size_t remainder_;
};

/// Uniform [0, 1) doubles for one SMAA iteration: mt19937_64 seeded from
/// (master seed, iteration index), top 53 bits scaled by 2^-53.
class IterationStream {
public:
    static constexpr const char* kAlgorithm = "mt19937_64 seed_seq(seed;iteration) top53";

    IterationStream(std::uint64_t seed, std::uint64_t iteration);

    double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

template <typename F>
concept UniformSource = std::invocable<F&> && std::convertible_to<std::invoke_result_t<F&>, double>;

/// Draws one alpha on the simplex. Uniform entries consume one value from
/// `uniform01` each, in feature order. A draw whose remainder would be
/// negative is rejected and redrawn; `rejections`, if given, counts them.
template <UniformSource Source>
std::vector<double> sample_alpha(const FeatureWeightSampler& sampler, Source&& uniform01,
                                 std::uint64_t* rejections = nullptr) {
    const auto& specs = sampler.specs();
    std::vector<double> alpha(specs.size());
    for (std::size_t attempt = 0; attempt < kMaxConsecutiveRejections; ++attempt) {
        double sum = 0.0;
        std::size_t remainder = specs.size();
        for (std::size_t k = 0; k < specs.size(); ++k) {
            if (const auto* p = std::get_if<PointAlpha>(&specs[k])) {
                alpha[k] = p->value;
            } else if (const auto* u = std::get_if<UniformAlpha>(&specs[k])) {
                alpha[k] = u->lower + (u->upper - u->lower) * static_cast<double>(uniform01());
            } else {
                remainder = k;
                alpha[k] = 0.0;
                continue;
            }
            sum += alpha[k];
        }
        if (remainder < specs.size()) {
            const double rest = 1.0 - sum;
            if (rest >= 0.0) {
                alpha[remainder] = rest;
                return alpha;
            }
        } else if (sum > 0.0) {
            for (auto& a : alpha) a /= sum;
            return alpha;
        }
        if (rejections) ++*rejections;
    }
    throw Error(ErrorCode::NegativeRemainder, "sampled feature weights exceeded 1 in " +
                                                  std::to_string(kMaxConsecutiveRejections) + " consecutive draws");
}

/// Provenance of a simulation's random numbers.
struct SeedRecord {
    std::string algorithm = IterationStream::kAlgorithm;
    std::uint64_t seed = 0;
};

/// Rank acceptability: entry (i, p) is the percentage of iterations in which
/// alternative i held position p (zero-based).
struct PercentageMatrix {
    std::vector<std::string> alternative_ids;
    std::vector<std::uint64_t> counts;  ///< row-major m x m
    std::vector<double> values;         ///< counts / L * 100
    std::uint64_t iterations = 0;
    std::uint64_t rejections = 0;
    SeedRecord seed;

    [[nodiscard]] std::size_t alternatives() const noexcept { return alternative_ids.size(); }
    [[nodiscard]] double at(std::size_t i, std::size_t position) const { return values[i * alternatives() + position]; }

    /// Builds a matrix directly from percentages (e.g. a published table).
    static PercentageMatrix from_values(std::vector<std::string> ids, std::vector<double> values);
};

struct SmaaOptions {
    std::uint64_t iterations = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    NormalizationMode normalization = NormalizationMode::DimensionalOnly;
};

/// Monte Carlo rank acceptability over feature weights. The result depends
/// only on (inputs, seed, iterations), never on the thread count.
PercentageMatrix run_smaa(const FeatureTensor& features, std::span<const double> criterion_weights,
                          const FeatureWeightSampler& sampler, const SmaaOptions& options);

struct PositionPick {
    std::size_t alternative = 0;
    double percentage = 0.0;
    bool tied = false;     ///< another alternative shares the maximum
    bool conflict = false; ///< the same alternative is picked for another position
};

struct MostLikelyRanking {
    std::vector<PositionPick> positions;

    [[nodiscard]] bool consistent() const noexcept {
        for (const auto& p : positions)
            if (p.conflict) return false;
        return true;
    }
};

/// Per position, the alternative with the largest percentage (lowest index
/// on ties). Conflicts are reported, not resolved.
MostLikelyRanking most_likely_ranking(const PercentageMatrix& matrix);

}  // namespace tensortopsis
