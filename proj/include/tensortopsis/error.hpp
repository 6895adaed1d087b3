#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tensortopsis {

enum class ErrorCode {
    MissingCell,
    DuplicateCell,
    NonFiniteValue,
    UnknownCriterionDirection,
    DuplicateLabel,
    IndexOutOfBounds,
    NegativeWeight,
    WeightSumNotOne,
    LengthMismatch,
    ShapeMismatch,
    ZeroMeanCV,
    EmptyFeatureList,
    DuplicateFeature,
    UnknownFeature,
    ZeroColumn,
    InvalidSampler,
    NegativeRemainder,
    ParseError,
    ConfigError,
    InvalidArgument,
    ReproductionMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. what() holds the detail text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(detail), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tensortopsis
