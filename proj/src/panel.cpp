#include "tensortopsis/panel.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "tensortopsis/error.hpp"

namespace tensortopsis {

std::string_view trim(std::string_view s) noexcept {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(std::string_view line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        fields.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return fields;
}

double parse_real(std::string_view field, std::string_view context) {
    const auto text = trim(field);
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw Error(ErrorCode::ParseError, std::string(context) + ": '" + std::string(text) + "' is not a number");
    }
    return value;
}

std::string format_roundtrip(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

namespace {

std::string where(std::string_view source, std::size_t line) {
    return std::string(source) + ":" + std::to_string(line);
}

bool is_integer(std::string_view s) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::vector<PanelRecord> parse_panel(std::istream& in, std::string_view source) {
    std::vector<PanelRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        if (trim(view).empty()) continue;
        if (!header_seen) {
            if (trim(view) != kPanelHeader) {
                throw Error(ErrorCode::ParseError,
                            where(source, line_no) + ": expected header '" + std::string(kPanelHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        auto fields = split_fields(view);
        if (fields.size() != 4) {
            throw Error(ErrorCode::ParseError, where(source, line_no) + ": expected 4 fields, found " +
                                                   std::to_string(fields.size()));
        }
        if (fields[0].empty() || fields[1].empty() || fields[2].empty()) {
            throw Error(ErrorCode::ParseError, where(source, line_no) + ": empty label");
        }
        const double value = parse_real(fields[3], where(source, line_no));
        records.push_back({std::move(fields[0]), std::move(fields[1]), std::move(fields[2]), value});
    }
    // A file with no lines at all is an empty panel; build_tensor reports it.
    return records;
}

DecisionTensor panel_to_tensor(const std::vector<PanelRecord>& records, const DirectionMap& directions) {
    std::set<std::string> label_set;
    for (const auto& r : records) label_set.insert(r.time);
    std::vector<std::string> labels(label_set.begin(), label_set.end());
    if (std::all_of(labels.begin(), labels.end(), is_integer)) {
        std::sort(labels.begin(), labels.end(),
                  [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });
    }
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t t = 0; t < labels.size(); ++t) index.emplace(labels[t], t + 1);

    std::vector<PanelRow> rows;
    rows.reserve(records.size());
    for (const auto& r : records) rows.push_back({r.alternative, r.criterion, index.at(r.time), r.value});
    return build_tensor(rows, directions, std::move(labels));
}

DecisionTensor read_panel(std::istream& in, const DirectionMap& directions, std::string_view source) {
    return panel_to_tensor(parse_panel(in, source), directions);
}

DecisionTensor load_panel(const std::filesystem::path& path, const DirectionMap& directions) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    }
    return read_panel(in, directions, path.string());
}

void write_panel(std::ostream& out, const DecisionTensor& tensor) {
    out << kPanelHeader << '\n';
    for (std::size_t i = 0; i < tensor.alternatives(); ++i)
        for (std::size_t j = 0; j < tensor.criteria(); ++j)
            for (std::size_t t = 0; t < tensor.samples(); ++t)
                out << tensor.alternative_ids()[i] << ',' << tensor.criterion_ids()[j] << ','
                    << tensor.time_labels()[t] << ',' << format_roundtrip(tensor.at(i, j, t)) << '\n';
}

void save_panel(const std::filesystem::path& path, const DecisionTensor& tensor) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    }
    write_panel(out, tensor);
}

std::vector<PanelRecord> parse_wide_panel(std::istream& in, std::string_view source) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<std::string, std::string>> columns;
    std::vector<PanelRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);
        if (columns.empty()) {
            if (fields.size() < 2 || fields[0] != "alternative") {
                throw Error(ErrorCode::ParseError, where(source, line_no) + ": expected 'alternative,<criterion>@<time>,...'");
            }
            for (std::size_t c = 1; c < fields.size(); ++c) {
                const auto at = fields[c].find('@');
                if (at == std::string::npos || at == 0 || at + 1 == fields[c].size()) {
                    throw Error(ErrorCode::ParseError, where(source, line_no) + ": bad column '" + fields[c] + "'");
                }
                columns.emplace_back(fields[c].substr(0, at), fields[c].substr(at + 1));
            }
            continue;
        }
        if (fields.size() != columns.size() + 1) {
            throw Error(ErrorCode::ParseError, where(source, line_no) + ": expected " +
                                                   std::to_string(columns.size() + 1) + " fields, found " +
                                                   std::to_string(fields.size()));
        }
        for (std::size_t c = 0; c < columns.size(); ++c) {
            records.push_back({fields[0], columns[c].first, columns[c].second,
                               parse_real(fields[c + 1], where(source, line_no))});
        }
    }
    if (columns.empty()) {
        throw Error(ErrorCode::ParseError, std::string(source) + ": missing header");
    }
    return records;
}

}  // namespace tensortopsis
