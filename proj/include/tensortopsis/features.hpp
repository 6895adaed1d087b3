#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tensortopsis/decision_tensor.hpp"

namespace tensortopsis {

/// How a feature's ideal points are chosen.
enum class DirectionClass {
    Benefit,             ///< higher is better regardless of criterion
    Cost,                ///< lower is better regardless of criterion
    CriterionDependent,  ///< follows the criterion's own direction
};

std::string_view to_string(DirectionClass d) noexcept;

/// Resolves a feature's direction class against a criterion direction.
[[nodiscard]] constexpr Direction effective_direction(DirectionClass feature, Direction criterion) noexcept {
    switch (feature) {
        case DirectionClass::Benefit: return Direction::Benefit;
        case DirectionClass::Cost: return Direction::Cost;
        case DirectionClass::CriterionDependent: return criterion;
    }
    return criterion;
}

using FeatureFunction = std::function<double(std::span<const double>)>;

/// A named time-series descriptor.
///
/// `dimensionless` marks features that carry no unit of the underlying
/// criterion (the coefficient of variation is a ratio). Normalization over
/// alternatives is skipped for those columns by default; see normalize().
struct FeatureKind {
    std::string name;
    DirectionClass direction = DirectionClass::CriterionDependent;
    bool dimensionless = false;
    FeatureFunction compute;

    static FeatureKind current();
    static FeatureKind average();
    static FeatureKind coefficient_of_variation();
    static FeatureKind slope();
    static FeatureKind custom(std::string name, DirectionClass direction, FeatureFunction fn,
                              bool dimensionless = false);
};

/// Last sample of the series.
double feature_current(std::span<const double> series);

/// Arithmetic mean.
double feature_mean(std::span<const double> series);

/// Population standard deviation (divisor T) over the mean.
/// Throws ZeroMeanCV when |mean| < 1e-12.
double feature_cv(std::span<const double> series);

/// Least-squares slope against the sample index 1..T with unit spacing.
/// A single sample has slope 0.
double feature_slope(std::span<const double> series);

/// Name -> FeatureKind lookup. Starts with "current", "average", "cv", "slope".
class FeatureRegistry {
public:
    FeatureRegistry();

    /// Throws DuplicateFeature on a name collision.
    void add(FeatureKind kind);

    /// Throws UnknownFeature.
    [[nodiscard]] const FeatureKind& find(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const noexcept;
    [[nodiscard]] std::vector<FeatureKind> resolve(std::span<const std::string> names) const;
    [[nodiscard]] std::vector<std::string> names() const;

private:
    std::vector<FeatureKind> kinds_;
};

/// Alternatives x criteria x features, with the metadata needed to rank.
class FeatureTensor {
public:
    FeatureTensor(Tensor3 values,
                  std::vector<FeatureKind> kinds,
                  std::vector<std::string> alternative_ids,
                  std::vector<std::string> criterion_ids,
                  std::vector<Direction> criterion_directions);

    [[nodiscard]] std::size_t alternatives() const noexcept { return values_.extent(0); }
    [[nodiscard]] std::size_t criteria() const noexcept { return values_.extent(1); }
    [[nodiscard]] std::size_t features() const noexcept { return values_.extent(2); }

    [[nodiscard]] const Tensor3& values() const noexcept { return values_; }
    [[nodiscard]] double at(std::size_t i, std::size_t j, std::size_t k) const { return values_(i, j, k); }
    [[nodiscard]] const std::vector<FeatureKind>& kinds() const noexcept { return kinds_; }
    [[nodiscard]] const std::vector<std::string>& alternative_ids() const noexcept { return alternative_ids_; }
    [[nodiscard]] const std::vector<std::string>& criterion_ids() const noexcept { return criterion_ids_; }
    [[nodiscard]] const std::vector<Direction>& criterion_directions() const noexcept { return directions_; }

    /// Direction used for column (j, k) when choosing ideal points.
    [[nodiscard]] Direction column_direction(std::size_t j, std::size_t k) const {
        return effective_direction(kinds_[k].direction, directions_[j]);
    }

    /// Same metadata, different values of identical shape.
    [[nodiscard]] FeatureTensor with_values(Tensor3 values) const;

private:
    Tensor3 values_;
    std::vector<FeatureKind> kinds_;
    std::vector<std::string> alternative_ids_;
    std::vector<std::string> criterion_ids_;
    std::vector<Direction> directions_;
};

inline Slice slice(const FeatureTensor& tensor, SliceKind kind, std::size_t index) {
    return slice(tensor.values(), kind, index);
}

/// Maps every series p(i, j, :) through each feature in order.
/// Feature errors are rethrown with the (alternative, criterion) prefixed.
FeatureTensor extract(const DecisionTensor& tensor, std::span<const FeatureKind> kinds);

}  // namespace tensortopsis
