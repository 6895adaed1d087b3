#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tensortopsis {

enum class Direction { Benefit, Cost };

std::string_view to_string(Direction d) noexcept;

/// Dense order-3 array stored row-major by (i, j, k): the last index is
/// contiguous. All indices are zero-based.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, double fill = 0.0);
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, std::vector<double> values);

    [[nodiscard]] std::array<std::size_t, 3> shape() const noexcept { return shape_; }
    [[nodiscard]] std::size_t extent(std::size_t axis) const { return shape_.at(axis); }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

    [[nodiscard]] double operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        return values_[(i * shape_[1] + j) * shape_[2] + k];
    }
    [[nodiscard]] double& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept {
        return values_[(i * shape_[1] + j) * shape_[2] + k];
    }

    /// The contiguous fiber (i, j, :).
    [[nodiscard]] std::span<const double> fiber(std::size_t i, std::size_t j) const noexcept {
        return {values_.data() + (i * shape_[1] + j) * shape_[2], shape_[2]};
    }

    [[nodiscard]] std::span<const double> data() const noexcept { return values_; }
    [[nodiscard]] std::span<double> data() noexcept { return values_; }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::array<std::size_t, 3> shape_{};
    std::vector<double> values_;
};

enum class SliceKind {
    Vertical,    ///< fixes the first index: P(i, :, :)
    Horizontal,  ///< fixes the second index: P(:, j, :)
    Frontal,     ///< fixes the third index: P(:, :, t)
};

/// Read-only matrix view of a tensor with one index fixed. The view borrows
/// the tensor's storage and must not outlive it.
class Slice {
public:
    Slice(const Tensor3& source, SliceKind kind, std::size_t index);

    [[nodiscard]] SliceKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t index() const noexcept { return index_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const noexcept {
        return base_[r * row_stride_ + c * col_stride_];
    }

    /// Dense row-major copy of the view.
    [[nodiscard]] std::vector<double> to_vector() const;

private:
    SliceKind kind_;
    std::size_t index_;
    const double* base_ = nullptr;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t row_stride_ = 0;
    std::size_t col_stride_ = 0;
};

Slice slice(const Tensor3& tensor, SliceKind kind, std::size_t index);

/// One (alternative, criterion, time) observation. time_index is 1-based.
struct PanelRow {
    std::string alternative;
    std::string criterion;
    std::size_t time_index = 0;
    double value = 0.0;

    friend bool operator==(const PanelRow&, const PanelRow&) = default;
};

using DirectionMap = std::map<std::string, Direction, std::less<>>;

/// Raw evaluations of m alternatives on n criteria over T time samples.
/// Immutable after construction; the constructor enforces all invariants.
class DecisionTensor {
public:
    DecisionTensor(Tensor3 values,
                   std::vector<std::string> alternative_ids,
                   std::vector<std::string> criterion_ids,
                   std::vector<std::string> time_labels,
                   std::vector<Direction> directions);

    [[nodiscard]] std::size_t alternatives() const noexcept { return values_.extent(0); }
    [[nodiscard]] std::size_t criteria() const noexcept { return values_.extent(1); }
    [[nodiscard]] std::size_t samples() const noexcept { return values_.extent(2); }

    [[nodiscard]] const Tensor3& values() const noexcept { return values_; }
    [[nodiscard]] double at(std::size_t i, std::size_t j, std::size_t t) const { return values_(i, j, t); }
    [[nodiscard]] std::span<const double> series(std::size_t i, std::size_t j) const { return values_.fiber(i, j); }

    [[nodiscard]] const std::vector<std::string>& alternative_ids() const noexcept { return alternative_ids_; }
    [[nodiscard]] const std::vector<std::string>& criterion_ids() const noexcept { return criterion_ids_; }
    [[nodiscard]] const std::vector<std::string>& time_labels() const noexcept { return time_labels_; }
    [[nodiscard]] const std::vector<Direction>& directions() const noexcept { return directions_; }

private:
    Tensor3 values_;
    std::vector<std::string> alternative_ids_;
    std::vector<std::string> criterion_ids_;
    std::vector<std::string> time_labels_;
    std::vector<Direction> directions_;
};

/// Assemble a tensor from long-format rows. Alternatives and criteria are
/// indexed by first appearance. When time_labels is empty the labels are
/// "1".."T".
DecisionTensor build_tensor(std::span<const PanelRow> rows,
                            const DirectionMap& directions,
                            std::vector<std::string> time_labels = {});

/// Inverse of build_tensor, in (i, j, t) order.
std::vector<PanelRow> flatten(const DecisionTensor& tensor);

inline Slice slice(const DecisionTensor& tensor, SliceKind kind, std::size_t index) {
    return slice(tensor.values(), kind, index);
}

/// Checks that labels are unique; throws DuplicateLabel otherwise.
void require_unique_labels(const std::vector<std::string>& labels, std::string_view what);

}  // namespace tensortopsis
