#include "tensortopsis/time_aggregation.hpp"

#include <algorithm>
#include <string>

#include "tensortopsis/error.hpp"
#include "tensortopsis/features.hpp"
#include "tensortopsis/topsis.hpp"
#include "tensortopsis/weights.hpp"

namespace tensortopsis {

PeriodWeightMatrix::PeriodWeightMatrix(std::size_t periods, std::size_t criteria, std::vector<double> values)
    : periods_(periods), criteria_(criteria), values_(std::move(values)) {
    validate_simplex(values_, periods_ * criteria_, "period weight matrix");
}

PeriodWeightMatrix PeriodWeightMatrix::uniform(std::size_t periods, std::size_t criteria) {
    const std::size_t cells = periods * criteria;
    return PeriodWeightMatrix(periods, criteria, std::vector<double>(cells, 1.0 / static_cast<double>(cells)));
}

std::vector<double> additive_aggregate(const DecisionTensor& tensor, const PeriodWeightMatrix& weights) {
    if (weights.periods() != tensor.samples() || weights.criteria() != tensor.criteria()) {
        throw Error(ErrorCode::ShapeMismatch, "weight matrix is " + std::to_string(weights.periods()) + "x" +
                                                  std::to_string(weights.criteria()) + ", tensor has T=" +
                                                  std::to_string(tensor.samples()) + ", n=" +
                                                  std::to_string(tensor.criteria()));
    }
    std::vector<double> f(tensor.alternatives(), 0.0);
    for (std::size_t i = 0; i < tensor.alternatives(); ++i)
        for (std::size_t j = 0; j < tensor.criteria(); ++j)
            for (std::size_t t = 0; t < tensor.samples(); ++t) f[i] += weights.at(t, j) * tensor.at(i, j, t);
    return f;
}

bool dominates(const DecisionTensor& tensor, std::size_t a, std::size_t b) {
    if (a >= tensor.alternatives() || b >= tensor.alternatives()) {
        throw Error(ErrorCode::IndexOutOfBounds, "alternative index out of range");
    }
    for (std::size_t j = 0; j < tensor.criteria(); ++j) {
        const bool benefit = tensor.directions()[j] == Direction::Benefit;
        for (std::size_t t = 0; t < tensor.samples(); ++t) {
            const double pa = tensor.at(a, j, t);
            const double pb = tensor.at(b, j, t);
            if (benefit ? pa < pb : pa > pb) return false;
        }
    }
    return true;
}

DecisionTensor motivating_example() {
    // P(i, :, :) rows are criteria, columns are periods.
    Tensor3 values(2, 2, 2, {4.25, 4.0,   // alternative 1, criterion 1
                             4.0, 3.75,   // alternative 1, criterion 2
                             2.0, 2.5,    // alternative 2, criterion 1
                             2.5, 3.0});  // alternative 2, criterion 2
    return DecisionTensor(std::move(values), {"1", "2"}, {"c1", "c2"}, {"t1", "t2"},
                          {Direction::Benefit, Direction::Benefit});
}

DecisionTensor slope_mapping(const DecisionTensor& tensor) {
    const FeatureKind kinds[] = {FeatureKind::slope()};
    const auto slopes = extract(tensor, kinds);
    return DecisionTensor(slopes.values(), tensor.alternative_ids(), tensor.criterion_ids(), {"slope"},
                          tensor.directions());
}

namespace {

bool has_tie(const std::vector<double>& scores, const std::vector<std::size_t>& order) {
    for (std::size_t p = 1; p < order.size(); ++p)
        if (scores[order[p]] == scores[order[p - 1]]) return true;
    return false;
}

}  // namespace

ReversalReport rank_reversal_demo(const DecisionTensor& tensor, const DomainMapping& mapping) {
    const DecisionTensor mapped = mapping(tensor);
    ReversalReport report;
    report.alternative_ids = tensor.alternative_ids();
    report.time_scores = additive_aggregate(tensor, PeriodWeightMatrix::uniform(tensor.samples(), tensor.criteria()));
    report.feature_scores = additive_aggregate(mapped, PeriodWeightMatrix::uniform(mapped.samples(), mapped.criteria()));
    report.time_order = order_by_score(report.time_scores);
    report.feature_order = order_by_score(report.feature_scores);
    report.time_tie = has_tie(report.time_scores, report.time_order);
    report.feature_tie = has_tie(report.feature_scores, report.feature_order);
    report.reversed = report.time_order != report.feature_order;
    return report;
}

ReversalReport rank_reversal_demo() {
    return rank_reversal_demo(motivating_example(), slope_mapping);
}

}  // namespace tensortopsis
