#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tensortopsis/config.hpp"
#include "tensortopsis/features.hpp"
#include "tensortopsis/panel.hpp"
#include "tensortopsis/smaa.hpp"
#include "tensortopsis/topsis.hpp"

namespace tensortopsis {

/// Everything needed to rank one panel under one configuration.
struct Analysis {
    AnalysisConfig config;
    DecisionTensor tensor;
    FeatureTensor features;
    /// Criterion weights in tensor order.
    std::vector<double> criterion_weights;

    [[nodiscard]] WeightScheme fixed_scheme() const;
    [[nodiscard]] FeatureWeightSampler sampler() const;
};

/// Config used when none is given: every criterion in the records is a
/// benefit criterion with equal weight, and the four experiment features
/// share alpha equally.
AnalysisConfig default_config(const std::vector<PanelRecord>& records);

/// Builds the tensor, validates the config against it and extracts features.
Analysis prepare(const std::vector<PanelRecord>& records, const AnalysisConfig& config,
                 const FeatureRegistry& registry = FeatureRegistry{});

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ReproduceOptions {
    std::filesystem::path data_dir;
    std::optional<std::uint64_t> iterations;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
};

struct StrategyRanking {
    std::string strategy;
    std::vector<std::string> order;
    std::vector<double> closeness;  ///< in order
};

struct ReproduceReport {
    std::vector<Check> checks;
    std::vector<StrategyRanking> rankings;
    PercentageMatrix smaa;

    [[nodiscard]] bool passed() const noexcept;
};

/// Runs strategies 1-5 on `hdi.csv` with `s1.cfg`..`s5.cfg` from the data
/// directory and compares against the tables under `expected/`.
ReproduceReport reproduce(const ReproduceOptions& options);

void write_reproduce_report(std::ostream& out, const ReproduceReport& report);

}  // namespace tensortopsis
