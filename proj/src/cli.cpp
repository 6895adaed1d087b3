#include "tensortopsis/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <vector>

#include "tensortopsis/error.hpp"
#include "tensortopsis/kernels.hpp"
#include "tensortopsis/pipeline.hpp"
#include "tensortopsis/tables.hpp"
#include "tensortopsis/time_aggregation.hpp"

#ifndef TENSORTOPSIS_DATA_DIR
#define TENSORTOPSIS_DATA_DIR "data"
#endif

namespace tensortopsis {

namespace {

struct InputOptions {
    std::string data;
    std::string config;
    std::string strategy;
    bool wide = false;
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
    cmd->add_option("--data", o.data, "panel file (alternative,criterion,time,value)")->required();
    cmd->add_option("--config", o.config, "analysis config");
    cmd->add_option("--strategy", o.strategy, "feature-weight preset S1..S5")
        ->check(CLI::Validator(
            [](std::string& s) {
                try {
                    (void)parse_strategy(s);
                    return std::string();
                } catch (const Error& e) {
                    return std::string(e.what());
                }
            },
            "S1..S5"));
    cmd->add_flag("--wide", o.wide, "data uses the wide layout alternative,<criterion>@<time>,...");
}

Analysis load_analysis(const InputOptions& o) {
    std::ifstream in(o.data);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + o.data);
    const auto records = o.wide ? parse_wide_panel(in, o.data) : parse_panel(in, o.data);
    auto config = o.config.empty() ? default_config(records) : load_config(o.config);
    if (!o.strategy.empty()) apply_strategy(config, parse_strategy(o.strategy));
    return prepare(records, config);
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Feature-space TOPSIS over alternatives x criteria x time panels"};
    app.name("tensortopsis");
    app.require_subcommand(1);

    InputOptions extract_in;
    auto* extract_cmd = app.add_subcommand("extract", "print the feature tensor");
    add_input_options(extract_cmd, extract_in);

    InputOptions rank_in;
    bool audit = false;
    std::string isa = "auto";
    std::string normalization = "dimensional";
    auto* rank_cmd = app.add_subcommand("rank", "rank alternatives with fixed feature weights");
    add_input_options(rank_cmd, rank_in);
    rank_cmd->add_flag("--audit", audit, "also print normalized and weighted tensors, ideals and distances");
    rank_cmd->add_option("--isa", isa, "kernel variant")->check(CLI::IsMember({"auto", "scalar", "avx2"}));
    rank_cmd->add_option("--normalize", normalization, "columns normalized over alternatives")
        ->check(CLI::IsMember({"dimensional", "all"}));

    InputOptions smaa_in;
    std::optional<std::uint64_t> iterations;
    std::optional<std::uint64_t> seed;
    unsigned threads = 1;
    bool most_likely = false;
    auto* smaa_cmd = app.add_subcommand("smaa", "rank acceptability over sampled feature weights");
    add_input_options(smaa_cmd, smaa_in);
    smaa_cmd->add_option("--iterations", iterations, "Monte Carlo draws (overrides config)")
        ->check(CLI::PositiveNumber);
    smaa_cmd->add_option("--seed", seed, "master seed (overrides config)");
    smaa_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    smaa_cmd->add_flag("--most-likely", most_likely, "also print the most likely alternative per position");

    app.add_subcommand("demo-dominance", "time-domain vs slope-domain preference on the two-alternative example");

    std::string data_dir = TENSORTOPSIS_DATA_DIR;
    std::optional<std::uint64_t> rep_iterations;
    std::optional<std::uint64_t> rep_seed;
    unsigned rep_threads = 1;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "rerun the HDI experiment against the expected tables");
    reproduce_cmd->add_option("--data-dir", data_dir, "directory holding hdi.csv, s1..s5.cfg and expected/")
        ->check(CLI::ExistingDirectory);
    reproduce_cmd->add_option("--iterations", rep_iterations)->check(CLI::PositiveNumber);
    reproduce_cmd->add_option("--seed", rep_seed);
    reproduce_cmd->add_option("--threads", rep_threads)->check(CLI::PositiveNumber);

    std::string wide_input;
    auto* convert_cmd = app.add_subcommand("convert-wide", "rewrite a wide-layout panel in long format");
    convert_cmd->add_option("input", wide_input, "wide panel file")->required();

    std::vector<std::string> storage{"tensortopsis"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage: " << e.what() << '\n';
        err << "run 'tensortopsis --help' for the list of commands\n";
        return 2;
    }

    try {
        if (*extract_cmd) {
            write_feature_table(out, load_analysis(extract_in).features);
        } else if (*rank_cmd) {
            if (isa != "auto") kernels::set_active(isa == "avx2" ? kernels::Isa::Avx2 : kernels::Isa::Scalar);
            const auto analysis = load_analysis(rank_in);
            RankOptions options;
            options.keep_audit = audit;
            options.normalization =
                normalization == "all" ? NormalizationMode::AllColumns : NormalizationMode::DimensionalOnly;
            const auto result = rank(analysis.features, analysis.fixed_scheme(), options);
            write_ranking_table(out, result, analysis.features.alternative_ids());
            if (audit) {
                out << '\n';
                write_audit_tables(out, *result.audit, result.closeness);
            }
        } else if (*smaa_cmd) {
            const auto analysis = load_analysis(smaa_in);
            SmaaOptions options;
            options.iterations = iterations.value_or(analysis.config.smaa.iterations);
            options.seed = seed.value_or(analysis.config.smaa.seed);
            options.threads = threads;
            const auto matrix = run_smaa(analysis.features, analysis.criterion_weights, analysis.sampler(), options);
            write_percentage_table(out, matrix);
            out << '\n';
            write_smaa_record(out, matrix);
            if (most_likely) {
                out << '\n';
                write_most_likely_table(out, most_likely_ranking(matrix), matrix.alternative_ids);
            }
        } else if (app.got_subcommand("demo-dominance")) {
            write_reversal_report(out, rank_reversal_demo());
        } else if (*reproduce_cmd) {
            ReproduceOptions options{data_dir, rep_iterations, rep_seed, rep_threads};
            const auto report = reproduce(options);
            write_reproduce_report(out, report);
            if (!report.passed()) {
                std::size_t failed = 0;
                for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
                throw Error(ErrorCode::ReproductionMismatch,
                            std::to_string(failed) + " check(s) differ from the expected tables");
            }
        } else if (*convert_cmd) {
            std::ifstream in(wide_input);
            if (!in) throw Error(ErrorCode::ParseError, "cannot open " + wide_input);
            const auto records = parse_wide_panel(in, wide_input);
            write_panel(out, panel_to_tensor(records, default_config(records).directions()));
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: Internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace tensortopsis
