#include "tensortopsis/weights.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "tensortopsis/error.hpp"

namespace tensortopsis {

void validate_simplex(std::span<const double> weights, std::size_t expected_length, std::string_view what) {
    if (weights.size() != expected_length) {
        throw Error(ErrorCode::LengthMismatch, std::string(what) + " has " + std::to_string(weights.size()) +
                                                   " entries, expected " + std::to_string(expected_length));
    }
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (!(weights[k] >= 0.0) || !std::isfinite(weights[k])) {
            throw Error(ErrorCode::NegativeWeight,
                        std::string(what) + "[" + std::to_string(k) + "] = " + std::to_string(weights[k]));
        }
    }
    const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(sum - 1.0) > kSimplexTolerance) {
        throw Error(ErrorCode::WeightSumNotOne, std::string(what) + " sums to " + std::to_string(sum));
    }
}

void validate_alpha_specs(std::span<const AlphaSpec> specs, std::size_t expected_length) {
    if (specs.size() != expected_length) {
        throw Error(ErrorCode::LengthMismatch, "feature weight sampler has " + std::to_string(specs.size()) +
                                                   " entries, expected " + std::to_string(expected_length));
    }
    std::size_t remainders = 0;
    double point_sum = 0.0;
    bool all_points = true;
    for (const auto& spec : specs) {
        if (const auto* p = std::get_if<PointAlpha>(&spec)) {
            if (!(p->value >= 0.0 && p->value <= 1.0)) {
                throw Error(ErrorCode::InvalidSampler, "point weight " + std::to_string(p->value) + " outside [0, 1]");
            }
            point_sum += p->value;
        } else if (const auto* u = std::get_if<UniformAlpha>(&spec)) {
            all_points = false;
            if (!(0.0 <= u->lower && u->lower < u->upper && u->upper <= 1.0)) {
                throw Error(ErrorCode::InvalidSampler, "uniform interval [" + std::to_string(u->lower) + ", " +
                                                           std::to_string(u->upper) + "] violates 0 <= a < b <= 1");
            }
        } else {
            all_points = false;
            ++remainders;
        }
    }
    if (remainders > 1) {
        throw Error(ErrorCode::InvalidSampler, "at most one remainder feature weight is allowed");
    }
    if (all_points && point_sum <= 0.0) {
        throw Error(ErrorCode::InvalidSampler, "point weights sum to zero");
    }
}

void validate_weights(const WeightScheme& scheme, std::size_t criteria, std::size_t features) {
    validate_simplex(scheme.criterion_weights, criteria, "criterion weights");
    if (scheme.has_fixed_alpha()) {
        validate_simplex(scheme.fixed_alpha(), features, "feature weights");
    } else {
        validate_alpha_specs(std::get<std::vector<AlphaSpec>>(scheme.feature_weights), features);
    }
}

std::vector<double> renormalize(std::span<const double> weights) {
    double sum = 0.0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (!(weights[k] >= 0.0) || !std::isfinite(weights[k])) {
            throw Error(ErrorCode::NegativeWeight, "weight[" + std::to_string(k) + "] = " + std::to_string(weights[k]));
        }
        sum += weights[k];
    }
    if (sum <= 0.0) {
        throw Error(ErrorCode::WeightSumNotOne, "weights sum to zero");
    }
    std::vector<double> out(weights.begin(), weights.end());
    for (auto& w : out) w /= sum;
    return out;
}

}  // namespace tensortopsis
