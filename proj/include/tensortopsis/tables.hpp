#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tensortopsis/features.hpp"
#include "tensortopsis/smaa.hpp"
#include "tensortopsis/time_aggregation.hpp"
#include "tensortopsis/topsis.hpp"

// Comma-separated output tables. Each table is a header line followed by
// rows; a stream may hold several tables separated by one blank line.
// Numbers are printed fixed with four decimals.

namespace tensortopsis {

std::string format_number(double value);

void write_feature_table(std::ostream& out, const FeatureTensor& features);
void write_ranking_table(std::ostream& out, const RankingResult& ranking, const std::vector<std::string>& ids);
void write_percentage_table(std::ostream& out, const PercentageMatrix& matrix);
void write_smaa_record(std::ostream& out, const PercentageMatrix& matrix);
void write_most_likely_table(std::ostream& out, const MostLikelyRanking& ranking, const std::vector<std::string>& ids);
/// Normalized and weighted tensors, ideal points, distances: four tables.
void write_audit_tables(std::ostream& out, const AuditTrail& audit, const std::vector<double>& closeness);
void write_reversal_report(std::ostream& out, const ReversalReport& report);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Splits a stream into blank-line separated tables.
std::vector<Table> read_tables(std::istream& in);

/// Identifies which emitted schema the table follows and checks every cell
/// against it. Returns the schema name; throws ParseError.
std::string validate_table(const Table& table);

}  // namespace tensortopsis
