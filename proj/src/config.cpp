#include "tensortopsis/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "tensortopsis/error.hpp"
#include "tensortopsis/hdi.hpp"
#include "tensortopsis/panel.hpp"

namespace tensortopsis {

namespace {

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

template <typename Int>
Int parse_unsigned(std::string_view text, const std::string& ctx) {
    Int v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::ConfigError, ctx + ": '" + std::string(text) + "' is not a non-negative integer");
    }
    return v;
}

double parse_config_real(std::string_view text, const std::string& ctx) {
    try {
        return parse_real(text, ctx);
    } catch (const Error& e) {
        throw Error(ErrorCode::ConfigError, e.what());
    }
}

AlphaSpec parse_alpha(const std::vector<std::string>& w, const std::string& ctx) {
    if (w.size() == 2 && w[0] == "point") return PointAlpha{parse_config_real(w[1], ctx)};
    if (w.size() == 3 && w[0] == "uniform")
        return UniformAlpha{parse_config_real(w[1], ctx), parse_config_real(w[2], ctx)};
    if (w.size() == 1 && w[0] == "remainder") return RemainderAlpha{};
    throw Error(ErrorCode::ConfigError, ctx + ": expected 'point <v>', 'uniform <a> <b>' or 'remainder'");
}

std::string alpha_text(const AlphaSpec& spec) {
    if (const auto* p = std::get_if<PointAlpha>(&spec)) return "point " + format_roundtrip(p->value);
    if (const auto* u = std::get_if<UniformAlpha>(&spec))
        return "uniform " + format_roundtrip(u->lower) + " " + format_roundtrip(u->upper);
    return "remainder";
}

}  // namespace

DirectionMap AnalysisConfig::directions() const {
    DirectionMap map;
    for (const auto& c : criteria) map.emplace(c.id, c.direction);
    return map;
}

std::vector<double> AnalysisConfig::criterion_weights() const {
    std::vector<double> w;
    for (const auto& c : criteria) w.push_back(c.weight);
    return renormalize(w);
}

std::vector<std::string> AnalysisConfig::feature_names() const {
    std::vector<std::string> names;
    for (const auto& f : features) names.push_back(f.name);
    return names;
}

std::vector<AlphaSpec> AnalysisConfig::alpha_specs() const {
    std::vector<AlphaSpec> specs;
    for (const auto& f : features) specs.push_back(f.alpha);
    return specs;
}

std::optional<std::vector<double>> AnalysisConfig::fixed_alpha() const {
    std::vector<double> alpha;
    for (const auto& f : features) {
        const auto* p = std::get_if<PointAlpha>(&f.alpha);
        if (!p) return std::nullopt;
        alpha.push_back(p->value);
    }
    return alpha;
}

int parse_strategy(std::string_view text) {
    auto t = trim(text);
    if (!t.empty() && (t.front() == 'S' || t.front() == 's')) t.remove_prefix(1);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), n);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || n < 1 || n > 5) {
        throw Error(ErrorCode::ConfigError, "unknown strategy '" + std::string(text) + "' (expected S1..S5)");
    }
    return n;
}

void apply_strategy(AnalysisConfig& config, int number) {
    const auto specs = hdi::strategy(number);
    config.features.clear();
    for (std::size_t k = 0; k < specs.size(); ++k) {
        config.features.push_back({std::string(hdi::kFeatureNames[k]), specs[k]});
    }
    config.preset = number;
}

AnalysisConfig parse_config(std::istream& in, std::string_view source) {
    AnalysisConfig config;
    std::string section;
    std::string line;
    std::size_t line_no = 0;
    std::set<std::string> feature_names;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string ctx = std::string(source) + ":" + std::to_string(line_no);
        auto view = std::string_view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty() || view.front() == ';') continue;
        if (view.front() == '[') {
            if (view.back() != ']') throw Error(ErrorCode::ConfigError, ctx + ": unterminated section header");
            section = std::string(trim(view.substr(1, view.size() - 2)));
            if (section != "criteria" && section != "features" && section != "smaa") {
                throw Error(ErrorCode::ConfigError, ctx + ": unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos || section.empty()) {
            throw Error(ErrorCode::ConfigError, ctx + ": expected 'key = value' inside a section");
        }
        const std::string key(trim(view.substr(0, eq)));
        const std::string value(trim(view.substr(eq + 1)));
        if (key.empty()) throw Error(ErrorCode::ConfigError, ctx + ": empty key");

        if (section == "criteria") {
            const auto w = words(value);
            if (w.size() != 2 || (w[0] != "benefit" && w[0] != "cost")) {
                throw Error(ErrorCode::ConfigError, ctx + ": expected '<benefit|cost> <weight>'");
            }
            for (const auto& c : config.criteria)
                if (c.id == key) throw Error(ErrorCode::ConfigError, ctx + ": criterion '" + key + "' repeated");
            config.criteria.push_back(
                {key, w[0] == "benefit" ? Direction::Benefit : Direction::Cost, parse_config_real(w[1], ctx)});
        } else if (section == "features") {
            if (key == "preset") {
                if (!config.features.empty()) {
                    throw Error(ErrorCode::ConfigError, ctx + ": preset cannot be combined with explicit features");
                }
                apply_strategy(config, parse_strategy(value));
                continue;
            }
            if (config.preset) {
                throw Error(ErrorCode::ConfigError, ctx + ": preset cannot be combined with explicit features");
            }
            if (!feature_names.insert(key).second) {
                throw Error(ErrorCode::ConfigError, ctx + ": feature '" + key + "' repeated");
            }
            config.features.push_back({key, parse_alpha(words(value), ctx)});
        } else {
            if (key == "iterations") {
                config.smaa.iterations = parse_unsigned<std::uint64_t>(value, ctx);
            } else if (key == "seed") {
                config.smaa.seed = parse_unsigned<std::uint64_t>(value, ctx);
            } else if (key == "threads") {
                config.smaa.threads = parse_unsigned<unsigned>(value, ctx);
            } else {
                throw Error(ErrorCode::ConfigError, ctx + ": unknown smaa key '" + key + "'");
            }
        }
    }
    return config;
}

AnalysisConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open " + path.string());
    return parse_config(in, path.string());
}

void validate(const AnalysisConfig& config, const FeatureRegistry& registry) {
    if (config.criteria.empty()) throw Error(ErrorCode::ConfigError, "no criteria configured");
    validate_simplex(config.criterion_weights(), config.criteria.size(), "criterion weights");
    if (config.features.empty()) throw Error(ErrorCode::ConfigError, "no features configured");
    for (const auto& f : config.features) (void)registry.find(f.name);
    const auto specs = config.alpha_specs();
    validate_alpha_specs(specs, specs.size());
    if (config.smaa.iterations == 0) throw Error(ErrorCode::ConfigError, "smaa iterations must be positive");
}

void write_config(std::ostream& out, const AnalysisConfig& config) {
    out << "[criteria]\n";
    for (const auto& c : config.criteria)
        out << c.id << " = " << to_string(c.direction) << ' ' << format_roundtrip(c.weight) << '\n';
    out << "\n[features]\n";
    if (config.preset) {
        out << "preset = S" << *config.preset << '\n';
    } else {
        for (const auto& f : config.features) out << f.name << " = " << alpha_text(f.alpha) << '\n';
    }
    out << "\n[smaa]\n"
        << "iterations = " << config.smaa.iterations << '\n'
        << "seed = " << config.smaa.seed << '\n'
        << "threads = " << config.smaa.threads << '\n';
}

}  // namespace tensortopsis
