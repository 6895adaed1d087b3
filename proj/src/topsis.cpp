#include "tensortopsis/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tensortopsis/error.hpp"
#include "tensortopsis/kernels.hpp"

namespace tensortopsis {

namespace {

// Factor for flattened column (j, k): w_j * alpha_k, in that order so that
// rank() and ClosenessEvaluator round identically.
std::vector<double> column_factors(std::span<const double> w, std::span<const double> alpha) {
    std::vector<double> f(w.size() * alpha.size());
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t k = 0; k < alpha.size(); ++k) f[j * alpha.size() + k] = w[j] * alpha[k];
    return f;
}

std::vector<bool> benefit_mask(const FeatureTensor& t) {
    std::vector<bool> mask(t.criteria() * t.features());
    for (std::size_t j = 0; j < t.criteria(); ++j)
        for (std::size_t k = 0; k < t.features(); ++k)
            mask[j * t.features() + k] = t.column_direction(j, k) == Direction::Benefit;
    return mask;
}

void select_ideals(const std::vector<bool>& benefit, std::span<const double> col_min, std::span<const double> col_max,
                   std::span<double> pos, std::span<double> neg) {
    for (std::size_t c = 0; c < benefit.size(); ++c) {
        pos[c] = benefit[c] ? col_max[c] : col_min[c];
        neg[c] = benefit[c] ? col_min[c] : col_max[c];
    }
}

double closeness_of(double dp, double dm) {
    const double denom = dp + dm;
    return denom > 0.0 ? dm / denom : 0.5;
}

std::vector<double> normalized_values(const FeatureTensor& s, NormalizationMode mode) {
    const std::size_t m = s.alternatives();
    const std::size_t h = s.features();
    const std::size_t cols = s.criteria() * h;
    const auto src = s.values().data();

    std::vector<double> sum_sq(cols);
    kernels::active().column_sum_squares(src.data(), m, cols, sum_sq.data());

    std::vector<double> inv(cols, 1.0);
    for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t k = c % h;
        if (mode == NormalizationMode::DimensionalOnly && s.kinds()[k].dimensionless) continue;
        if (sum_sq[c] == 0.0) {
            throw Error(ErrorCode::ZeroColumn, "column (" + s.criterion_ids()[c / h] + ", " + s.kinds()[k].name +
                                                   ") is zero for every alternative");
        }
        inv[c] = 1.0 / std::sqrt(sum_sq[c]);
    }
    std::vector<double> out(src.size());
    kernels::active().scale_columns(src.data(), inv.data(), out.data(), m, cols);
    return out;
}

}  // namespace

FeatureTensor normalize(const FeatureTensor& features, NormalizationMode mode) {
    const auto [m, n, h] = features.values().shape();
    return features.with_values(Tensor3(m, n, h, normalized_values(features, mode)));
}

FeatureTensor weigh(const FeatureTensor& normalized, std::span<const double> criterion_weights,
                    std::span<const double> alpha) {
    const auto [m, n, h] = normalized.values().shape();
    if (criterion_weights.size() != n || alpha.size() != h) {
        throw Error(ErrorCode::LengthMismatch, "weights (" + std::to_string(criterion_weights.size()) + ", " +
                                                   std::to_string(alpha.size()) + ") do not match tensor (" +
                                                   std::to_string(n) + " criteria, " + std::to_string(h) +
                                                   " features)");
    }
    const auto factors = column_factors(criterion_weights, alpha);
    std::vector<double> out(m * n * h);
    kernels::active().scale_columns(normalized.values().data().data(), factors.data(), out.data(), m, n * h);
    return normalized.with_values(Tensor3(m, n, h, std::move(out)));
}

IdealPoints ideal_points(const FeatureTensor& weighted) {
    const std::size_t cols = weighted.criteria() * weighted.features();
    std::vector<double> lo(cols), hi(cols);
    kernels::active().column_extrema(weighted.values().data().data(), weighted.alternatives(), cols, lo.data(),
                                     hi.data());
    IdealPoints ideals{weighted.criteria(), weighted.features(), std::vector<double>(cols),
                       std::vector<double>(cols)};
    select_ideals(benefit_mask(weighted), lo, hi, ideals.positive, ideals.negative);
    return ideals;
}

Distances distances(const FeatureTensor& weighted, const IdealPoints& ideals) {
    const std::size_t m = weighted.alternatives();
    const std::size_t cols = weighted.criteria() * weighted.features();
    if (ideals.positive.size() != cols || ideals.negative.size() != cols) {
        throw Error(ErrorCode::ShapeMismatch, "ideal points do not match the weighted tensor");
    }
    Distances d{std::vector<double>(m), std::vector<double>(m)};
    kernels::active().row_sq_distances(weighted.values().data().data(), m, cols, ideals.positive.data(),
                                       ideals.negative.data(), d.plus.data(), d.minus.data());
    for (std::size_t i = 0; i < m; ++i) {
        d.plus[i] = std::sqrt(d.plus[i]);
        d.minus[i] = std::sqrt(d.minus[i]);
    }
    return d;
}

std::vector<double> closeness(std::span<const double> d_plus, std::span<const double> d_minus) {
    if (d_plus.size() != d_minus.size()) {
        throw Error(ErrorCode::LengthMismatch, "distance vectors differ in length");
    }
    std::vector<double> g(d_plus.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = closeness_of(d_plus[i], d_minus[i]);
    return g;
}

std::vector<std::size_t> order_by_score(std::span<const double> scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    return order;
}

namespace {

std::vector<std::vector<std::size_t>> tie_groups(std::span<const double> g, std::span<const std::size_t> order) {
    std::vector<std::vector<std::size_t>> ties;
    for (std::size_t p = 0; p < order.size();) {
        std::size_t q = p + 1;
        while (q < order.size() && g[order[q]] == g[order[p]]) ++q;
        if (q - p > 1) ties.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(p),
                                         order.begin() + static_cast<std::ptrdiff_t>(q));
        p = q;
    }
    return ties;
}

}  // namespace

RankingResult rank(const FeatureTensor& features, const WeightScheme& scheme, const RankOptions& options) {
    if (!scheme.has_fixed_alpha()) {
        throw Error(ErrorCode::InvalidArgument, "rank() needs a fixed feature weight vector");
    }
    validate_weights(scheme, features.criteria(), features.features());

    auto normalized = normalize(features, options.normalization);
    auto weighted = weigh(normalized, scheme.criterion_weights, scheme.fixed_alpha());
    auto ideals = ideal_points(weighted);
    auto dist = distances(weighted, ideals);

    RankingResult result;
    result.closeness = closeness(dist.plus, dist.minus);
    result.order = order_by_score(result.closeness);
    result.ties = tie_groups(result.closeness, result.order);
    if (options.keep_audit) {
        result.audit.emplace(AuditTrail{std::move(normalized), std::move(weighted), std::move(ideals), std::move(dist)});
    }
    return result;
}

ClosenessEvaluator::ClosenessEvaluator(const FeatureTensor& features, std::span<const double> criterion_weights,
                                       NormalizationMode mode)
    : rows_(features.alternatives()),
      criteria_(features.criteria()),
      features_(features.features()),
      normalized_(normalized_values(features, mode)),
      criterion_weights_(criterion_weights.begin(), criterion_weights.end()),
      benefit_(benefit_mask(features)) {
    validate_simplex(criterion_weights_, criteria_, "criterion weights");
    const std::size_t cols = criteria_ * features_;
    factors_.resize(cols);
    weighted_.resize(rows_ * cols);
    col_min_.resize(cols);
    col_max_.resize(cols);
    pos_.resize(cols);
    neg_.resize(cols);
    plus_sq_.resize(rows_);
    minus_sq_.resize(rows_);
    closeness_.resize(rows_);
}

std::span<const double> ClosenessEvaluator::evaluate(std::span<const double> alpha) {
    if (alpha.size() != features_) {
        throw Error(ErrorCode::LengthMismatch, "alpha has " + std::to_string(alpha.size()) + " entries, expected " +
                                                   std::to_string(features_));
    }
    const auto& kt = kernels::active();
    const std::size_t cols = criteria_ * features_;
    for (std::size_t j = 0; j < criteria_; ++j)
        for (std::size_t k = 0; k < features_; ++k) factors_[j * features_ + k] = criterion_weights_[j] * alpha[k];
    kt.scale_columns(normalized_.data(), factors_.data(), weighted_.data(), rows_, cols);
    kt.column_extrema(weighted_.data(), rows_, cols, col_min_.data(), col_max_.data());
    select_ideals(benefit_, col_min_, col_max_, pos_, neg_);
    kt.row_sq_distances(weighted_.data(), rows_, cols, pos_.data(), neg_.data(), plus_sq_.data(), minus_sq_.data());
    for (std::size_t i = 0; i < rows_; ++i) {
        closeness_[i] = closeness_of(std::sqrt(plus_sq_[i]), std::sqrt(minus_sq_[i]));
    }
    return closeness_;
}

}  // namespace tensortopsis
