#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace tensortopsis {

/// Tolerance on |sum - 1| for every weight vector on the simplex.
inline constexpr double kSimplexTolerance = 1e-9;

/// A feature weight fixed to one value.
struct PointAlpha {
    double value = 0.0;
};

/// A feature weight drawn from U[lower, upper], 0 <= lower < upper <= 1.
struct UniformAlpha {
    double lower = 0.0;
    double upper = 1.0;
};

/// The feature weight that closes the simplex: 1 minus the sum of the others.
struct RemainderAlpha {};

using AlphaSpec = std::variant<PointAlpha, UniformAlpha, RemainderAlpha>;

/// Criterion weights w plus feature weights alpha, the latter either a fixed
/// vector or one sampling spec per feature.
struct WeightScheme {
    std::vector<double> criterion_weights;
    std::variant<std::vector<double>, std::vector<AlphaSpec>> feature_weights;

    [[nodiscard]] bool has_fixed_alpha() const noexcept {
        return std::holds_alternative<std::vector<double>>(feature_weights);
    }
    [[nodiscard]] const std::vector<double>& fixed_alpha() const { return std::get<std::vector<double>>(feature_weights); }
};

/// Throws LengthMismatch, NegativeWeight or WeightSumNotOne.
void validate_simplex(std::span<const double> weights, std::size_t expected_length, std::string_view what);

/// Throws InvalidSampler for bad intervals, out-of-range points or more than one remainder.
void validate_alpha_specs(std::span<const AlphaSpec> specs, std::size_t expected_length);

/// Checks w against n criteria and alpha against h features.
void validate_weights(const WeightScheme& scheme, std::size_t criteria, std::size_t features);

/// Divides a nonnegative vector by its sum. Used for printed weights such
/// as 0.333 that only approximately close the simplex.
std::vector<double> renormalize(std::span<const double> weights);

}  // namespace tensortopsis
