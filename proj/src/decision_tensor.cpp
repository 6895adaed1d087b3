#include "tensortopsis/decision_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "tensortopsis/error.hpp"

namespace tensortopsis {

std::string_view to_string(Direction d) noexcept {
    return d == Direction::Benefit ? "benefit" : "cost";
}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, double fill)
    : shape_{d0, d1, d2}, values_(d0 * d1 * d2, fill) {}

Tensor3::Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, std::vector<double> values)
    : shape_{d0, d1, d2}, values_(std::move(values)) {
    if (values_.size() != d0 * d1 * d2) {
        throw Error(ErrorCode::ShapeMismatch,
                    "tensor storage holds " + std::to_string(values_.size()) + " values, shape needs " +
                        std::to_string(d0 * d1 * d2));
    }
}

Slice::Slice(const Tensor3& source, SliceKind kind, std::size_t index) : kind_(kind), index_(index) {
    const auto [d0, d1, d2] = source.shape();
    const std::size_t axis = kind == SliceKind::Vertical ? 0 : kind == SliceKind::Horizontal ? 1 : 2;
    const std::size_t bound = source.shape()[axis];
    if (index >= bound) {
        throw Error(ErrorCode::IndexOutOfBounds,
                    "slice index " + std::to_string(index) + " out of range for axis of extent " +
                        std::to_string(bound));
    }
    const double* data = source.data().data();
    switch (kind) {
        case SliceKind::Vertical:
            base_ = data + index * d1 * d2;
            rows_ = d1;
            cols_ = d2;
            row_stride_ = d2;
            col_stride_ = 1;
            break;
        case SliceKind::Horizontal:
            base_ = data + index * d2;
            rows_ = d0;
            cols_ = d2;
            row_stride_ = d1 * d2;
            col_stride_ = 1;
            break;
        case SliceKind::Frontal:
            base_ = data + index;
            rows_ = d0;
            cols_ = d1;
            row_stride_ = d1 * d2;
            col_stride_ = d2;
            break;
    }
}

std::vector<double> Slice::to_vector() const {
    std::vector<double> out;
    out.reserve(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.push_back((*this)(r, c));
    return out;
}

Slice slice(const Tensor3& tensor, SliceKind kind, std::size_t index) {
    return Slice(tensor, kind, index);
}

void require_unique_labels(const std::vector<std::string>& labels, std::string_view what) {
    std::set<std::string_view> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw Error(ErrorCode::DuplicateLabel, "duplicate " + std::string(what) + " label '" + label + "'");
        }
    }
}

DecisionTensor::DecisionTensor(Tensor3 values,
                               std::vector<std::string> alternative_ids,
                               std::vector<std::string> criterion_ids,
                               std::vector<std::string> time_labels,
                               std::vector<Direction> directions)
    : values_(std::move(values)),
      alternative_ids_(std::move(alternative_ids)),
      criterion_ids_(std::move(criterion_ids)),
      time_labels_(std::move(time_labels)),
      directions_(std::move(directions)) {
    const auto [m, n, T] = values_.shape();
    if (m == 0 || n == 0 || T == 0) {
        throw Error(ErrorCode::MissingCell, "decision tensor needs at least one alternative, criterion and sample");
    }
    if (alternative_ids_.size() != m || criterion_ids_.size() != n || time_labels_.size() != T ||
        directions_.size() != n) {
        throw Error(ErrorCode::ShapeMismatch, "label or direction count does not match tensor shape");
    }
    require_unique_labels(alternative_ids_, "alternative");
    require_unique_labels(criterion_ids_, "criterion");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < T; ++t)
                if (!std::isfinite(values_(i, j, t))) {
                    throw Error(ErrorCode::NonFiniteValue, "non-finite value at (" + alternative_ids_[i] + ", " +
                                                               criterion_ids_[j] + ", " + time_labels_[t] + ")");
                }
}

namespace {

std::size_t intern(std::unordered_map<std::string, std::size_t>& index, std::vector<std::string>& order,
                   const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, order.size());
    if (inserted) order.push_back(label);
    return it->second;
}

}  // namespace

DecisionTensor build_tensor(std::span<const PanelRow> rows, const DirectionMap& directions,
                            std::vector<std::string> time_labels) {
    std::unordered_map<std::string, std::size_t> alt_index, crit_index;
    std::vector<std::string> alternatives, criteria;
    std::set<std::size_t> times;
    for (const auto& row : rows) {
        intern(alt_index, alternatives, row.alternative);
        intern(crit_index, criteria, row.criterion);
        if (row.time_index == 0) {
            throw Error(ErrorCode::InvalidArgument, "time indices are 1-based");
        }
        times.insert(row.time_index);
    }
    if (rows.empty()) {
        throw Error(ErrorCode::MissingCell, "no observations");
    }
    const std::size_t T = *times.rbegin();
    const std::size_t m = alternatives.size();
    const std::size_t n = criteria.size();

    std::vector<Direction> dirs;
    dirs.reserve(n);
    for (const auto& c : criteria) {
        auto it = directions.find(c);
        if (it == directions.end()) {
            throw Error(ErrorCode::UnknownCriterionDirection, "no direction given for criterion '" + c + "'");
        }
        dirs.push_back(it->second);
    }

    Tensor3 values(m, n, T);
    std::vector<bool> filled(m * n * T, false);
    for (const auto& row : rows) {
        if (!std::isfinite(row.value)) {
            throw Error(ErrorCode::NonFiniteValue, "non-finite value at (" + row.alternative + ", " + row.criterion +
                                                       ", " + std::to_string(row.time_index) + ")");
        }
        const std::size_t i = alt_index.at(row.alternative);
        const std::size_t j = crit_index.at(row.criterion);
        const std::size_t t = row.time_index - 1;
        const std::size_t flat = (i * n + j) * T + t;
        if (filled[flat]) {
            throw Error(ErrorCode::DuplicateCell, "duplicate cell (" + row.alternative + ", " + row.criterion + ", " +
                                                      std::to_string(row.time_index) + ")");
        }
        filled[flat] = true;
        values(i, j, t) = row.value;
    }
    for (std::size_t flat = 0; flat < filled.size(); ++flat) {
        if (!filled[flat]) {
            const std::size_t t = flat % T;
            const std::size_t j = (flat / T) % n;
            const std::size_t i = flat / (T * n);
            throw Error(ErrorCode::MissingCell, "missing cell (" + alternatives[i] + ", " + criteria[j] + ", " +
                                                    std::to_string(t + 1) + ")");
        }
    }

    if (time_labels.empty()) {
        for (std::size_t t = 1; t <= T; ++t) time_labels.push_back(std::to_string(t));
    } else if (time_labels.size() != T) {
        throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(T) + " time labels");
    }
    return DecisionTensor(std::move(values), std::move(alternatives), std::move(criteria), std::move(time_labels),
                          std::move(dirs));
}

std::vector<PanelRow> flatten(const DecisionTensor& tensor) {
    std::vector<PanelRow> rows;
    rows.reserve(tensor.values().size());
    for (std::size_t i = 0; i < tensor.alternatives(); ++i)
        for (std::size_t j = 0; j < tensor.criteria(); ++j)
            for (std::size_t t = 0; t < tensor.samples(); ++t)
                rows.push_back({tensor.alternative_ids()[i], tensor.criterion_ids()[j], t + 1, tensor.at(i, j, t)});
    return rows;
}

}  // namespace tensortopsis
