#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensortopsis/decision_tensor.hpp"
#include "tensortopsis/features.hpp"
#include "tensortopsis/weights.hpp"

// Analysis configuration: an INI-like text file.
//
//   [criteria]
//   c1 = benefit 0.333        # direction and weight; weights are renormalized
//   [features]
//   current = remainder       # point <v> | uniform <a> <b> | remainder
//   average = uniform 0.1 0.2
//   # or: preset = S1 .. S5 (current, average, cv, slope with the strategy's weights)
//   [smaa]
//   iterations = 10000
//   seed = 20210415
//   threads = 1

namespace tensortopsis {

struct CriterionConfig {
    std::string id;
    Direction direction = Direction::Benefit;
    double weight = 0.0;
};

struct FeatureConfig {
    std::string name;
    AlphaSpec alpha;
};

struct SmaaConfig {
    std::uint64_t iterations = 10000;
    std::uint64_t seed = 20210415;
    unsigned threads = 1;
};

struct AnalysisConfig {
    std::vector<CriterionConfig> criteria;
    std::vector<FeatureConfig> features;
    SmaaConfig smaa;
    std::optional<int> preset;

    [[nodiscard]] DirectionMap directions() const;
    /// Criterion weights in config order, divided by their sum.
    [[nodiscard]] std::vector<double> criterion_weights() const;
    [[nodiscard]] std::vector<std::string> feature_names() const;
    [[nodiscard]] std::vector<AlphaSpec> alpha_specs() const;
    /// The alpha vector when every feature weight is a point; nullopt otherwise.
    [[nodiscard]] std::optional<std::vector<double>> fixed_alpha() const;
};

/// Throws ConfigError with the line number on malformed input.
AnalysisConfig parse_config(std::istream& in, std::string_view source = "<stream>");
AnalysisConfig load_config(const std::filesystem::path& path);

/// Accepts "S3", "s3" or "3".
int parse_strategy(std::string_view text);

/// Replaces the feature list with the four experiment features weighted as
/// strategy `number`.
void apply_strategy(AnalysisConfig& config, int number);

/// Cross-checks feature names against the registry, alpha specs and
/// criterion weights. Throws ConfigError / UnknownFeature / InvalidSampler.
void validate(const AnalysisConfig& config, const FeatureRegistry& registry);

/// Serializes a config in the same format parse_config reads.
void write_config(std::ostream& out, const AnalysisConfig& config);

}  // namespace tensortopsis
