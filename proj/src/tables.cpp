#include "tensortopsis/tables.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>

#include "tensortopsis/error.hpp"
#include "tensortopsis/panel.hpp"

namespace tensortopsis {

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

void write_feature_table(std::ostream& out, const FeatureTensor& features) {
    out << "alternative,criterion,feature,value\n";
    for (std::size_t i = 0; i < features.alternatives(); ++i)
        for (std::size_t j = 0; j < features.criteria(); ++j)
            for (std::size_t k = 0; k < features.features(); ++k)
                out << features.alternative_ids()[i] << ',' << features.criterion_ids()[j] << ','
                    << features.kinds()[k].name << ',' << format_number(features.at(i, j, k)) << '\n';
}

void write_ranking_table(std::ostream& out, const RankingResult& ranking, const std::vector<std::string>& ids) {
    out << "alternative,g,position\n";
    for (std::size_t p = 0; p < ranking.order.size(); ++p) {
        const auto i = ranking.order[p];
        out << ids[i] << ',' << format_number(ranking.closeness[i]) << ',' << p + 1 << '\n';
    }
}

void write_percentage_table(std::ostream& out, const PercentageMatrix& matrix) {
    const std::size_t m = matrix.alternatives();
    out << "alternative";
    for (std::size_t p = 1; p <= m; ++p) out << ",pct@" << p;
    out << '\n';
    for (std::size_t i = 0; i < m; ++i) {
        out << matrix.alternative_ids[i];
        for (std::size_t p = 0; p < m; ++p) out << ',' << format_number(matrix.at(i, p));
        out << '\n';
    }
}

void write_smaa_record(std::ostream& out, const PercentageMatrix& matrix) {
    out << "key,value\n"
        << "rng," << matrix.seed.algorithm << '\n'
        << "seed," << matrix.seed.seed << '\n'
        << "iterations," << matrix.iterations << '\n'
        << "rejections," << matrix.rejections << '\n';
}

void write_most_likely_table(std::ostream& out, const MostLikelyRanking& ranking, const std::vector<std::string>& ids) {
    out << "position,alternative,percentage,tied,conflict\n";
    for (std::size_t p = 0; p < ranking.positions.size(); ++p) {
        const auto& pick = ranking.positions[p];
        out << p + 1 << ',' << ids[pick.alternative] << ',' << format_number(pick.percentage) << ','
            << (pick.tied ? 1 : 0) << ',' << (pick.conflict ? 1 : 0) << '\n';
    }
}

void write_audit_tables(std::ostream& out, const AuditTrail& audit, const std::vector<double>& closeness) {
    out << "tensor,alternative,criterion,feature,value\n";
    for (const auto* t : {&audit.normalized, &audit.weighted}) {
        const char* name = t == &audit.normalized ? "normalized" : "weighted";
        for (std::size_t i = 0; i < t->alternatives(); ++i)
            for (std::size_t j = 0; j < t->criteria(); ++j)
                for (std::size_t k = 0; k < t->features(); ++k)
                    out << name << ',' << t->alternative_ids()[i] << ',' << t->criterion_ids()[j] << ','
                        << t->kinds()[k].name << ',' << format_number(t->at(i, j, k)) << '\n';
    }
    out << "\ncriterion,feature,positive,negative\n";
    const auto& w = audit.weighted;
    for (std::size_t j = 0; j < w.criteria(); ++j)
        for (std::size_t k = 0; k < w.features(); ++k)
            out << w.criterion_ids()[j] << ',' << w.kinds()[k].name << ','
                << format_number(audit.ideals.positive_at(j, k)) << ','
                << format_number(audit.ideals.negative_at(j, k)) << '\n';
    out << "\nalternative,d_plus,d_minus,g\n";
    for (std::size_t i = 0; i < w.alternatives(); ++i)
        out << w.alternative_ids()[i] << ',' << format_number(audit.distances.plus[i]) << ','
            << format_number(audit.distances.minus[i]) << ',' << format_number(closeness[i]) << '\n';
}

void write_reversal_report(std::ostream& out, const ReversalReport& report) {
    out << "domain,alternative,score,position\n";
    const auto emit = [&](const char* domain, const std::vector<double>& scores, const std::vector<std::size_t>& order) {
        for (std::size_t p = 0; p < order.size(); ++p)
            out << domain << ',' << report.alternative_ids[order[p]] << ',' << format_number(scores[order[p]]) << ','
                << p + 1 << '\n';
    };
    emit("time", report.time_scores, report.time_order);
    emit("feature", report.feature_scores, report.feature_order);
    out << "\nkey,value\n"
        << "time_tie," << (report.time_tie ? 1 : 0) << '\n'
        << "feature_tie," << (report.feature_tie ? 1 : 0) << '\n'
        << "reversed," << (report.reversed ? 1 : 0) << '\n';
}

std::vector<Table> read_tables(std::istream& in) {
    std::vector<Table> tables;
    Table current;
    bool open = false;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            if (open) tables.push_back(std::move(current));
            current = {};
            open = false;
            continue;
        }
        auto fields = split_fields(line);
        if (!open) {
            current.header = std::move(fields);
            open = true;
        } else {
            current.rows.push_back(std::move(fields));
        }
    }
    if (open) tables.push_back(std::move(current));
    return tables;
}

namespace {

enum class Cell { Text, Real, Count, Flag };

bool cell_ok(const std::string& s, Cell type) {
    switch (type) {
        case Cell::Text: return !s.empty();
        case Cell::Real: {
            try {
                (void)parse_real(s, "");
                return true;
            } catch (const Error&) {
                return false;
            }
        }
        case Cell::Count: {
            unsigned long long v = 0;
            const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
        }
        case Cell::Flag: return s == "0" || s == "1";
    }
    return false;
}

struct Schema {
    std::vector<std::string> header;
    std::vector<Cell> cells;
};

const std::map<std::string, Schema>& schemas() {
    using C = Cell;
    static const std::map<std::string, Schema> s = {
        {"features", {{"alternative", "criterion", "feature", "value"}, {C::Text, C::Text, C::Text, C::Real}}},
        {"ranking", {{"alternative", "g", "position"}, {C::Text, C::Real, C::Count}}},
        {"record", {{"key", "value"}, {C::Text, C::Text}}},
        {"most_likely",
         {{"position", "alternative", "percentage", "tied", "conflict"}, {C::Count, C::Text, C::Real, C::Flag, C::Flag}}},
        {"audit_tensor",
         {{"tensor", "alternative", "criterion", "feature", "value"}, {C::Text, C::Text, C::Text, C::Text, C::Real}}},
        {"audit_ideals", {{"criterion", "feature", "positive", "negative"}, {C::Text, C::Text, C::Real, C::Real}}},
        {"audit_distances", {{"alternative", "d_plus", "d_minus", "g"}, {C::Text, C::Real, C::Real, C::Real}}},
        {"reversal", {{"domain", "alternative", "score", "position"}, {C::Text, C::Text, C::Real, C::Count}}},
        {"checks", {{"check", "status", "detail"}, {C::Text, C::Text, C::Text}}},
        {"panel", {{"alternative", "criterion", "time", "value"}, {C::Text, C::Text, C::Text, C::Real}}},
        {"strategy_rankings",
         {{"strategy", "position", "alternative", "score"}, {C::Text, C::Count, C::Text, C::Real}}},
        {"expected_features",
         {{"alternative", "criterion", "feature", "value", "tolerance"}, {C::Text, C::Text, C::Text, C::Real, C::Real}}},
        {"expected_rankings", {{"strategy", "order", "compare"}, {C::Text, C::Text, C::Text}}},
    };
    return s;
}

}  // namespace

std::string validate_table(const Table& table) {
    std::string name;
    std::vector<Cell> cells;
    for (const auto& [n, schema] : schemas()) {
        if (schema.header == table.header) {
            name = n;
            cells = schema.cells;
            break;
        }
    }
    if (name.empty() && table.header.size() >= 2 && table.header[0] == "alternative") {
        bool pct = true;
        for (std::size_t p = 1; p < table.header.size(); ++p)
            pct = pct && table.header[p] == "pct@" + std::to_string(p);
        if (pct) {
            name = "percentages";
            cells.assign(table.header.size(), Cell::Real);
            cells[0] = Cell::Text;
        }
    }
    if (name.empty()) {
        std::string h;
        for (const auto& f : table.header) h += (h.empty() ? "" : ",") + f;
        throw Error(ErrorCode::ParseError, "unrecognized table header '" + h + "'");
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != cells.size()) {
            throw Error(ErrorCode::ParseError, name + " row " + std::to_string(r + 1) + ": expected " +
                                                   std::to_string(cells.size()) + " fields");
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!cell_ok(row[c], cells[c])) {
                throw Error(ErrorCode::ParseError, name + " row " + std::to_string(r + 1) + ", column '" +
                                                       table.header[c] + "': bad value '" + row[c] + "'");
            }
        }
    }
    return name;
}

}  // namespace tensortopsis
