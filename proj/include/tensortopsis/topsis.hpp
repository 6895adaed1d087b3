#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tensortopsis/features.hpp"
#include "tensortopsis/weights.hpp"

namespace tensortopsis {

/// Which (criterion, feature) columns are divided by their Euclidean norm
/// over alternatives.
enum class NormalizationMode {
    DimensionalOnly,  ///< skip features flagged dimensionless (default)
    AllColumns,       ///< normalize every column
};

/// Per-(criterion, feature) best and worst weighted values, row-major (j, k).
struct IdealPoints {
    std::size_t criteria = 0;
    std::size_t features = 0;
    std::vector<double> positive;
    std::vector<double> negative;

    [[nodiscard]] double positive_at(std::size_t j, std::size_t k) const { return positive[j * features + k]; }
    [[nodiscard]] double negative_at(std::size_t j, std::size_t k) const { return negative[j * features + k]; }
};

struct Distances {
    std::vector<double> plus;
    std::vector<double> minus;
};

/// Intermediate tensors kept for audit output.
struct AuditTrail {
    FeatureTensor normalized;
    FeatureTensor weighted;
    IdealPoints ideals;
    Distances distances;
};

struct RankingResult {
    std::vector<double> closeness;
    /// Alternative indices by non-increasing closeness; ties keep input order.
    std::vector<std::size_t> order;
    /// Groups (size >= 2) of alternatives with exactly equal closeness, in order.
    std::vector<std::vector<std::size_t>> ties;
    std::optional<AuditTrail> audit;
};

/// n_ijk = s_ijk / sqrt(sum over alternatives of s_i'jk^2). Throws ZeroColumn
/// when a normalized column is all zero.
FeatureTensor normalize(const FeatureTensor& features, NormalizationMode mode = NormalizationMode::DimensionalOnly);

/// v_ijk = n_ijk * (w_j * alpha_k). Throws LengthMismatch.
FeatureTensor weigh(const FeatureTensor& normalized, std::span<const double> criterion_weights,
                    std::span<const double> alpha);

/// Extrema over alternatives for every (j, k): max is positive for benefit
/// columns, min for cost columns.
IdealPoints ideal_points(const FeatureTensor& weighted);

/// Euclidean distance of every alternative to both ideal points.
Distances distances(const FeatureTensor& weighted, const IdealPoints& ideals);

/// g_i = d-_i / (d+_i + d-_i). When both distances are zero the alternative
/// coincides with both ideals and gets 0.5.
std::vector<double> closeness(std::span<const double> d_plus, std::span<const double> d_minus);

/// Stable descending order of scores.
std::vector<std::size_t> order_by_score(std::span<const double> scores);

struct RankOptions {
    NormalizationMode normalization = NormalizationMode::DimensionalOnly;
    bool keep_audit = false;
};

/// normalize -> weigh -> ideal_points -> distances -> closeness -> sort.
/// The scheme must carry a fixed alpha.
RankingResult rank(const FeatureTensor& features, const WeightScheme& scheme, const RankOptions& options = {});

/// Closeness evaluator for repeated alpha draws over one feature tensor.
/// Normalizes once and reuses scratch buffers; produces the same bits as
/// rank(). Not thread-safe: give each worker its own copy.
class ClosenessEvaluator {
public:
    ClosenessEvaluator(const FeatureTensor& features, std::span<const double> criterion_weights,
                       NormalizationMode mode = NormalizationMode::DimensionalOnly);

    /// Closeness vector for one feature-weight vector (not revalidated).
    std::span<const double> evaluate(std::span<const double> alpha);

    [[nodiscard]] std::size_t alternatives() const noexcept { return rows_; }
    [[nodiscard]] std::size_t features() const noexcept { return features_; }

private:
    std::size_t rows_;
    std::size_t criteria_;
    std::size_t features_;
    std::vector<double> normalized_;
    std::vector<double> criterion_weights_;
    std::vector<bool> benefit_;
    std::vector<double> factors_;
    std::vector<double> weighted_;
    std::vector<double> col_min_, col_max_, pos_, neg_;
    std::vector<double> plus_sq_, minus_sq_, closeness_;
};

}  // namespace tensortopsis
