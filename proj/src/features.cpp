#include "tensortopsis/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "tensortopsis/error.hpp"

namespace tensortopsis {

std::string_view to_string(DirectionClass d) noexcept {
    switch (d) {
        case DirectionClass::Benefit: return "benefit";
        case DirectionClass::Cost: return "cost";
        case DirectionClass::CriterionDependent: return "criterion";
    }
    return "criterion";
}

double feature_current(std::span<const double> series) {
    if (series.empty()) throw Error(ErrorCode::InvalidArgument, "empty series");
    return series.back();
}

double feature_mean(std::span<const double> series) {
    if (series.empty()) throw Error(ErrorCode::InvalidArgument, "empty series");
    return std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(series.size());
}

double feature_cv(std::span<const double> series) {
    const double mean = feature_mean(series);
    if (std::abs(mean) < 1e-12) {
        throw Error(ErrorCode::ZeroMeanCV, "coefficient of variation undefined for zero-mean series");
    }
    double ss = 0.0;
    for (double y : series) ss += (y - mean) * (y - mean);
    return std::sqrt(ss / static_cast<double>(series.size())) / mean;
}

double feature_slope(std::span<const double> series) {
    if (series.empty()) throw Error(ErrorCode::InvalidArgument, "empty series");
    const std::size_t T = series.size();
    if (T == 1) return 0.0;
    const double t_mean = (static_cast<double>(T) + 1.0) / 2.0;
    const double y_mean = feature_mean(series);
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        const double dt = static_cast<double>(t + 1) - t_mean;
        sxy += dt * (series[t] - y_mean);
        sxx += dt * dt;
    }
    return sxy / sxx;
}

FeatureKind FeatureKind::current() {
    return {"current", DirectionClass::CriterionDependent, false, feature_current};
}
FeatureKind FeatureKind::average() {
    return {"average", DirectionClass::CriterionDependent, false, feature_mean};
}
FeatureKind FeatureKind::coefficient_of_variation() {
    return {"cv", DirectionClass::Cost, true, feature_cv};
}
FeatureKind FeatureKind::slope() {
    return {"slope", DirectionClass::CriterionDependent, false, feature_slope};
}
FeatureKind FeatureKind::custom(std::string name, DirectionClass direction, FeatureFunction fn, bool dimensionless) {
    if (name.empty() || !fn) {
        throw Error(ErrorCode::InvalidArgument, "custom feature needs a name and a function");
    }
    return {std::move(name), direction, dimensionless, std::move(fn)};
}

FeatureRegistry::FeatureRegistry()
    : kinds_{FeatureKind::current(), FeatureKind::average(), FeatureKind::coefficient_of_variation(),
             FeatureKind::slope()} {}

void FeatureRegistry::add(FeatureKind kind) {
    if (contains(kind.name)) {
        throw Error(ErrorCode::DuplicateFeature, "feature '" + kind.name + "' already registered");
    }
    kinds_.push_back(std::move(kind));
}

bool FeatureRegistry::contains(std::string_view name) const noexcept {
    return std::any_of(kinds_.begin(), kinds_.end(), [&](const FeatureKind& k) { return k.name == name; });
}

const FeatureKind& FeatureRegistry::find(std::string_view name) const {
    for (const auto& k : kinds_)
        if (k.name == name) return k;
    throw Error(ErrorCode::UnknownFeature, "unknown feature '" + std::string(name) + "'");
}

std::vector<FeatureKind> FeatureRegistry::resolve(std::span<const std::string> names) const {
    std::vector<FeatureKind> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(find(n));
    return out;
}

std::vector<std::string> FeatureRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& k : kinds_) out.push_back(k.name);
    return out;
}

FeatureTensor::FeatureTensor(Tensor3 values, std::vector<FeatureKind> kinds,
                             std::vector<std::string> alternative_ids, std::vector<std::string> criterion_ids,
                             std::vector<Direction> criterion_directions)
    : values_(std::move(values)),
      kinds_(std::move(kinds)),
      alternative_ids_(std::move(alternative_ids)),
      criterion_ids_(std::move(criterion_ids)),
      directions_(std::move(criterion_directions)) {
    const auto [m, n, h] = values_.shape();
    if (kinds_.empty() || h == 0) {
        throw Error(ErrorCode::EmptyFeatureList, "feature tensor needs at least one feature");
    }
    if (m == 0 || n == 0) {
        throw Error(ErrorCode::MissingCell, "feature tensor needs at least one alternative and criterion");
    }
    if (kinds_.size() != h || alternative_ids_.size() != m || criterion_ids_.size() != n ||
        directions_.size() != n) {
        throw Error(ErrorCode::ShapeMismatch, "feature tensor metadata does not match its shape");
    }
    std::set<std::string_view> names;
    for (const auto& k : kinds_) {
        if (!names.insert(k.name).second) {
            throw Error(ErrorCode::DuplicateFeature, "feature '" + k.name + "' listed twice");
        }
    }
    require_unique_labels(alternative_ids_, "alternative");
    require_unique_labels(criterion_ids_, "criterion");
    for (double v : values_.data()) {
        if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "non-finite feature value");
    }
}

FeatureTensor FeatureTensor::with_values(Tensor3 values) const {
    if (values.shape() != values_.shape()) {
        throw Error(ErrorCode::ShapeMismatch, "replacement values must keep the feature tensor shape");
    }
    return FeatureTensor(std::move(values), kinds_, alternative_ids_, criterion_ids_, directions_);
}

FeatureTensor extract(const DecisionTensor& tensor, std::span<const FeatureKind> kinds) {
    if (kinds.empty()) {
        throw Error(ErrorCode::EmptyFeatureList, "no features requested");
    }
    const std::size_t m = tensor.alternatives();
    const std::size_t n = tensor.criteria();
    const std::size_t h = kinds.size();
    Tensor3 values(m, n, h);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto series = tensor.series(i, j);
            for (std::size_t k = 0; k < h; ++k) {
                try {
                    values(i, j, k) = kinds[k].compute(series);
                } catch (const Error& e) {
                    throw Error(e.code(), "feature '" + kinds[k].name + "' at (" + tensor.alternative_ids()[i] +
                                              ", " + tensor.criterion_ids()[j] + "): " + e.what());
                }
            }
        }
    }
    return FeatureTensor(std::move(values), {kinds.begin(), kinds.end()}, tensor.alternative_ids(),
                         tensor.criterion_ids(), tensor.directions());
}

}  // namespace tensortopsis
