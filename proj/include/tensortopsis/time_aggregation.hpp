#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tensortopsis/decision_tensor.hpp"

namespace tensortopsis {

/// Importance of criterion j in period t, indexed (t, j). Entries are
/// nonnegative and sum to one.
class PeriodWeightMatrix {
public:
    PeriodWeightMatrix(std::size_t periods, std::size_t criteria, std::vector<double> values);

    /// Every cell 1 / (periods * criteria).
    static PeriodWeightMatrix uniform(std::size_t periods, std::size_t criteria);

    [[nodiscard]] std::size_t periods() const noexcept { return periods_; }
    [[nodiscard]] std::size_t criteria() const noexcept { return criteria_; }
    [[nodiscard]] double at(std::size_t t, std::size_t j) const { return values_[t * criteria_ + j]; }

private:
    std::size_t periods_;
    std::size_t criteria_;
    std::vector<double> values_;
};

/// f_i = sum_j sum_t w_tj p_ijt. Throws ShapeMismatch.
std::vector<double> additive_aggregate(const DecisionTensor& tensor, const PeriodWeightMatrix& weights);

/// True iff `a` is at least as good as `b` in every (criterion, time) cell,
/// reading "good" through each criterion's direction.
bool dominates(const DecisionTensor& tensor, std::size_t a, std::size_t b);

/// Two alternatives, two benefit criteria, two periods. Alternative 1
/// dominates 2 cell by cell, aggregates to (4, 2.5) under the uniform 2x2
/// weights, yet its slopes aggregate to (-0.25, 0.5).
DecisionTensor motivating_example();

/// Collapses each series to its least-squares slope; the result has T = 1.
DecisionTensor slope_mapping(const DecisionTensor& tensor);

using DomainMapping = std::function<DecisionTensor(const DecisionTensor&)>;

struct ReversalReport {
    std::vector<std::string> alternative_ids;
    std::vector<double> time_scores;
    std::vector<double> feature_scores;
    std::vector<std::size_t> time_order;
    std::vector<std::size_t> feature_order;
    bool time_tie = false;
    bool feature_tie = false;
    /// The two preference orders differ.
    bool reversed = false;
};

/// Aggregates the tensor with uniform weights in the time domain and again
/// after `mapping`, and compares the two preference orders.
ReversalReport rank_reversal_demo(const DecisionTensor& tensor, const DomainMapping& mapping);

/// The motivating example under the slope mapping.
ReversalReport rank_reversal_demo();

}  // namespace tensortopsis
