#include "tensortopsis/error.hpp"

namespace tensortopsis {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MissingCell: return "MissingCell";
        case ErrorCode::DuplicateCell: return "DuplicateCell";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::UnknownCriterionDirection: return "UnknownCriterionDirection";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::IndexOutOfBounds: return "IndexOutOfBounds";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::WeightSumNotOne: return "WeightSumNotOne";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::ZeroMeanCV: return "ZeroMeanCV";
        case ErrorCode::EmptyFeatureList: return "EmptyFeatureList";
        case ErrorCode::DuplicateFeature: return "DuplicateFeature";
        case ErrorCode::UnknownFeature: return "UnknownFeature";
        case ErrorCode::ZeroColumn: return "ZeroColumn";
        case ErrorCode::InvalidSampler: return "InvalidSampler";
        case ErrorCode::NegativeRemainder: return "NegativeRemainder";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ReproductionMismatch: return "ReproductionMismatch";
    }
    return "Unknown";
}

}  // namespace tensortopsis
