#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tensortopsis/decision_tensor.hpp"

namespace tensortopsis {

/// One line of a long-format panel file: `alternative,criterion,time,value`.
struct PanelRecord {
    std::string alternative;
    std::string criterion;
    std::string time;
    double value = 0.0;
};

inline constexpr std::string_view kPanelHeader = "alternative,criterion,time,value";

/// Parses a long-format panel. Throws ParseError naming `source` and the line.
std::vector<PanelRecord> parse_panel(std::istream& in, std::string_view source = "<stream>");

/// Orders time labels (numerically when all are integers, else as text,
/// which sorts ISO dates) and builds the tensor.
DecisionTensor panel_to_tensor(const std::vector<PanelRecord>& records, const DirectionMap& directions);

DecisionTensor read_panel(std::istream& in, const DirectionMap& directions, std::string_view source = "<stream>");
DecisionTensor load_panel(const std::filesystem::path& path, const DirectionMap& directions);

/// Writes the tensor in long format with round-trip precision.
void write_panel(std::ostream& out, const DecisionTensor& tensor);
void save_panel(const std::filesystem::path& path, const DecisionTensor& tensor);

/// Wide layout: header `alternative,<criterion>@<time>,...`, one row per
/// alternative. Returns the equivalent long-format records.
std::vector<PanelRecord> parse_wide_panel(std::istream& in, std::string_view source = "<stream>");

/// Field helpers shared by the text formats.
std::vector<std::string> split_fields(std::string_view line, char sep = ',');
std::string_view trim(std::string_view s) noexcept;
/// Strict decimal parse ('.' separator, whole field). Throws ParseError.
double parse_real(std::string_view field, std::string_view context);
/// Shortest representation that parses back to the same double.
std::string format_roundtrip(double value);

}  // namespace tensortopsis
