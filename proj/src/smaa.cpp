#include "tensortopsis/smaa.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <thread>

namespace tensortopsis {

FeatureWeightSampler::FeatureWeightSampler(std::vector<AlphaSpec> specs)
    : specs_(std::move(specs)), remainder_(specs_.size()) {
    if (specs_.empty()) {
        throw Error(ErrorCode::EmptyFeatureList, "feature weight sampler needs at least one feature");
    }
    validate_alpha_specs(specs_, specs_.size());
    for (std::size_t k = 0; k < specs_.size(); ++k)
        if (std::holds_alternative<RemainderAlpha>(specs_[k])) remainder_ = k;
}

FeatureWeightSampler FeatureWeightSampler::strategy5() {
    return FeatureWeightSampler(
        {RemainderAlpha{}, UniformAlpha{0.1, 0.2}, UniformAlpha{0.1, 0.2}, UniformAlpha{0.1, 0.2}});
}

FeatureWeightSampler FeatureWeightSampler::fixed(std::span<const double> alpha) {
    validate_simplex(alpha, alpha.size(), "feature weights");
    std::vector<AlphaSpec> specs;
    for (double a : alpha) specs.emplace_back(PointAlpha{a});
    return FeatureWeightSampler(std::move(specs));
}

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t iteration) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(iteration), static_cast<std::uint32_t>(iteration >> 32)};
    return std::mt19937_64(seq);
}

struct WorkerResult {
    std::vector<std::uint64_t> counts;
    std::uint64_t rejections = 0;
    std::optional<std::uint64_t> failed_iteration;
    std::optional<Error> error;
};

void simulate_range(const FeatureTensor& features, std::span<const double> w, const FeatureWeightSampler& sampler,
                    const SmaaOptions& options, std::uint64_t begin, std::uint64_t end, WorkerResult& out) {
    const std::size_t m = features.alternatives();
    out.counts.assign(m * m, 0);
    try {
        ClosenessEvaluator evaluator(features, w, options.normalization);
        for (std::uint64_t it = begin; it < end; ++it) {
            try {
                IterationStream stream(options.seed, it);
                const auto alpha = sample_alpha(sampler, stream, &out.rejections);
                const auto g = evaluator.evaluate(alpha);
                const auto order = order_by_score(g);
                for (std::size_t pos = 0; pos < m; ++pos) ++out.counts[order[pos] * m + pos];
            } catch (const Error& e) {
                out.failed_iteration = it;
                out.error.emplace(e.code(), "iteration " + std::to_string(it) + ": " + e.what());
                return;
            }
        }
    } catch (const Error& e) {
        out.failed_iteration = begin;
        out.error.emplace(e);
    }
}

}  // namespace

IterationStream::IterationStream(std::uint64_t seed, std::uint64_t iteration)
    : engine_(make_engine(seed, iteration)) {}

PercentageMatrix PercentageMatrix::from_values(std::vector<std::string> ids, std::vector<double> values) {
    if (values.size() != ids.size() * ids.size()) {
        throw Error(ErrorCode::ShapeMismatch, "percentage matrix must be square in the number of alternatives");
    }
    PercentageMatrix pm;
    pm.alternative_ids = std::move(ids);
    pm.values = std::move(values);
    return pm;
}

PercentageMatrix run_smaa(const FeatureTensor& features, std::span<const double> criterion_weights,
                          const FeatureWeightSampler& sampler, const SmaaOptions& options) {
    if (options.iterations == 0) {
        throw Error(ErrorCode::InvalidArgument, "SMAA needs at least one iteration");
    }
    if (sampler.size() != features.features()) {
        throw Error(ErrorCode::LengthMismatch, "sampler has " + std::to_string(sampler.size()) +
                                                   " features, tensor has " + std::to_string(features.features()));
    }
    validate_simplex(criterion_weights, features.criteria(), "criterion weights");

    const std::uint64_t L = options.iterations;
    const std::uint64_t workers = std::clamp<std::uint64_t>(options.threads, 1, L);
    std::vector<WorkerResult> results(workers);
    {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 1; w < workers; ++w) {
            pool.emplace_back([&, w] {
                simulate_range(features, criterion_weights, sampler, options, L * w / workers, L * (w + 1) / workers,
                               results[w]);
            });
        }
        simulate_range(features, criterion_weights, sampler, options, 0, L / workers, results[0]);
    }

    // Report the failure with the lowest iteration index so the error does
    // not depend on scheduling.
    const WorkerResult* first_failure = nullptr;
    for (const auto& r : results) {
        if (r.error && (!first_failure || *r.failed_iteration < *first_failure->failed_iteration)) first_failure = &r;
    }
    if (first_failure) throw *first_failure->error;

    const std::size_t m = features.alternatives();
    PercentageMatrix pm;
    pm.alternative_ids = features.alternative_ids();
    pm.counts.assign(m * m, 0);
    pm.iterations = L;
    pm.seed.seed = options.seed;
    for (const auto& r : results) {
        for (std::size_t c = 0; c < pm.counts.size(); ++c) pm.counts[c] += r.counts[c];
        pm.rejections += r.rejections;
    }
    pm.values.resize(m * m);
    for (std::size_t c = 0; c < pm.counts.size(); ++c) {
        pm.values[c] = static_cast<double>(pm.counts[c]) / static_cast<double>(L) * 100.0;
    }
    return pm;
}

MostLikelyRanking most_likely_ranking(const PercentageMatrix& matrix) {
    const std::size_t m = matrix.alternatives();
    MostLikelyRanking out;
    out.positions.resize(m);
    for (std::size_t pos = 0; pos < m; ++pos) {
        auto& pick = out.positions[pos];
        pick.percentage = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double v = matrix.at(i, pos);
            if (v > pick.percentage) {
                pick.alternative = i;
                pick.percentage = v;
                pick.tied = false;
            } else if (v == pick.percentage) {
                pick.tied = true;
            }
        }
    }
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q)
            if (p != q && out.positions[p].alternative == out.positions[q].alternative) {
                out.positions[p].conflict = true;
            }
    return out;
}

}  // namespace tensortopsis
