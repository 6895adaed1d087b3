#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tensortopsis/config.hpp"
#include "tensortopsis/hdi.hpp"
#include "tensortopsis/panel.hpp"
#include "tensortopsis/pipeline.hpp"
#include "tensortopsis/tables.hpp"

using namespace tensortopsis;
namespace fs = std::filesystem;

namespace {

DirectionMap all_benefit(std::initializer_list<const char*> ids) {
    DirectionMap d;
    for (const char* id : ids) d.emplace(id, Direction::Benefit);
    return d;
}

DecisionTensor read(const std::string& text, const DirectionMap& dirs) {
    std::istringstream in(text);
    return read_panel(in, dirs, "test.csv");
}

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / ("tensortopsis_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
    return dir;
}

void expect_tables_reparse(const std::string& text, const std::vector<std::string>& schemas) {
    std::istringstream in(text);
    const auto tables = read_tables(in);
    ASSERT_EQ(tables.size(), schemas.size()) << text;
    for (std::size_t t = 0; t < tables.size(); ++t) EXPECT_EQ(validate_table(tables[t]), schemas[t]);
}

}  // namespace

TEST(LoadPanel, BundledCorpusMatchesInMemoryPanel) {
    const auto t = load_panel(testing_support::data_path("hdi.csv"), all_benefit({"c1", "c2", "c3"}));
    EXPECT_EQ(t.values(), hdi::panel().values());
    EXPECT_EQ(t.alternative_ids(), hdi::panel().alternative_ids());
    EXPECT_EQ(t.time_labels(), hdi::panel().time_labels());
}

TEST(LoadPanel, WideLayoutMatchesLong) {
    std::ifstream in(testing_support::data_path("hdi_wide.csv"));
    const auto records = parse_wide_panel(in, "hdi_wide.csv");
    const auto t = panel_to_tensor(records, all_benefit({"c1", "c2", "c3"}));
    EXPECT_EQ(t.values(), hdi::panel().values());
}

TEST(LoadPanel, EmptyOrHeaderOnlyIsMissingCell) {
    EXPECT_ERROR_CODE(read("", all_benefit({"c1"})), MissingCell);
    EXPECT_ERROR_CODE(read("alternative,criterion,time,value\n", all_benefit({"c1"})), MissingCell);
}

TEST(LoadPanel, CommaDecimalIsParseErrorWithLine) {
    try {
        (void)read("alternative,criterion,time,value\nBR,c1,1985,64.1\nBR,c1,1990,65,3\n", all_benefit({"c1"}));
        FAIL() << "expected ParseError";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_NE(std::string(e.what()).find("test.csv:3"), std::string::npos) << e.what();
    }
    EXPECT_ERROR_CODE(read("alternative,criterion,time,value\nBR,c1,1990,1e\n", all_benefit({"c1"})), ParseError);
    EXPECT_ERROR_CODE(read("alt,crit,t,v\n", all_benefit({"c1"})), ParseError);
    EXPECT_ERROR_CODE(read("alternative,criterion,time,value\nBR,,1990,1\n", all_benefit({"c1"})), ParseError);
}

TEST(LoadPanel, TimeLabelsSortNumericallyAndAsDates) {
    const auto t = read("alternative,criterion,time,value\na,c,10,3\na,c,9,2\na,c,100,4\n", all_benefit({"c"}));
    EXPECT_EQ(t.time_labels(), (std::vector<std::string>{"9", "10", "100"}));
    EXPECT_EQ(t.series(0, 0)[0], 2);
    const auto d = read("alternative,criterion,time,value\na,c,2021-03-01,3\na,c,2020-12-31,2\n", all_benefit({"c"}));
    EXPECT_EQ(d.time_labels(), (std::vector<std::string>{"2020-12-31", "2021-03-01"}));
    EXPECT_EQ(d.series(0, 0)[1], 3);
}

TEST(LoadPanel, BuildErrorsPropagate) {
    EXPECT_ERROR_CODE(read("alternative,criterion,time,value\na,c,1,1\na,c,1,2\n", all_benefit({"c"})), DuplicateCell);
    EXPECT_ERROR_CODE(read("alternative,criterion,time,value\na,c,1,1\nb,c,2,2\n", all_benefit({"c"})), MissingCell);
    EXPECT_ERROR_CODE(read("alternative,criterion,time,value\na,x,1,1\n", all_benefit({"c"})), UnknownCriterionDirection);
    EXPECT_ERROR_CODE(read("alternative,criterion,time,value\na,c,1,nan\n", all_benefit({"c"})), NonFiniteValue);
}

TEST(SavePanel, RoundTripIsIdentity) {
    std::mt19937_64 rng(61);
    const auto dir = scratch_dir();
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t m = 1 + rng() % 5, n = 1 + rng() % 4, T = 1 + rng() % 6;
        Tensor3 v(m, n, T);
        for (auto& x : v.data()) x = u(rng) * std::ldexp(1.0, static_cast<int>(rng() % 60) - 30);
        std::vector<Direction> dirs(n);
        DirectionMap map;
        const auto crit = testing_support::labels("crit", n);
        for (std::size_t j = 0; j < n; ++j) {
            dirs[j] = rng() % 2 ? Direction::Benefit : Direction::Cost;
            map.emplace(crit[j], dirs[j]);
        }
        std::vector<std::string> years;
        for (std::size_t t = 0; t < T; ++t) years.push_back(std::to_string(2000 + 3 * t));
        const DecisionTensor p(v, testing_support::labels("alt", m), crit, years, dirs);
        save_panel(dir / "p.csv", p);
        const auto q = load_panel(dir / "p.csv", map);
        EXPECT_EQ(q.values(), p.values());
        EXPECT_EQ(q.alternative_ids(), p.alternative_ids());
        EXPECT_EQ(q.criterion_ids(), p.criterion_ids());
        EXPECT_EQ(q.time_labels(), p.time_labels());
        EXPECT_EQ(q.directions(), p.directions());
    }
    fs::remove_all(dir);
}

TEST(Config, ParsesAllSections) {
    std::istringstream in(R"(# comment
[criteria]
price = cost 2
quality = benefit 1   # trailing comment

[features]
current = remainder
cv = uniform 0.1 0.3
slope = point 0.2

[smaa]
iterations = 500
seed = 99
threads = 4
)");
    const auto c = parse_config(in, "x.cfg");
    ASSERT_EQ(c.criteria.size(), 2u);
    EXPECT_EQ(c.criteria[0].direction, Direction::Cost);
    EXPECT_NEAR(c.criterion_weights()[0], 2.0 / 3.0, 1e-15);
    EXPECT_EQ(c.feature_names(), (std::vector<std::string>{"current", "cv", "slope"}));
    EXPECT_FALSE(c.fixed_alpha());
    EXPECT_EQ(c.smaa.iterations, 500u);
    EXPECT_EQ(c.smaa.seed, 99u);
    EXPECT_EQ(c.smaa.threads, 4u);
    EXPECT_NO_THROW(validate(c, FeatureRegistry{}));
}

TEST(Config, PresetsAndStrategies) {
    for (int s = 1; s <= 5; ++s) {
        const auto c = load_config(testing_support::data_path("s" + std::to_string(s) + ".cfg"));
        EXPECT_EQ(c.preset, s);
        EXPECT_EQ(c.feature_names(), (std::vector<std::string>{"current", "average", "cv", "slope"}));
        EXPECT_EQ(c.fixed_alpha().has_value(), s < 5);
    }
    const auto c = load_config(testing_support::data_path("hdi.cfg"));
    EXPECT_EQ(c.alpha_specs().size(), 4u);
    EXPECT_TRUE(std::holds_alternative<RemainderAlpha>(c.alpha_specs()[0]));
    EXPECT_EQ(parse_strategy("s3"), 3);
    EXPECT_EQ(parse_strategy("4"), 4);
    EXPECT_ERROR_CODE(parse_strategy("S6"), ConfigError);
    EXPECT_ERROR_CODE(parse_strategy("x"), ConfigError);
}

TEST(Config, Errors) {
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_config(in, "bad.cfg");
    };
    EXPECT_ERROR_CODE(parse("[weird]\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("c1 = benefit 1\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("[criteria]\nc1 = better 1\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("[criteria]\nc1 = benefit\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("[criteria]\nc1 = benefit 1\nc1 = cost 1\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("[features]\ncv = gaussian 0 1\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("[features]\ncv = point 0.5\ncv = point 0.5\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("[features]\npreset = S2\ncv = point 1\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("[smaa]\niterations = -3\n"), ConfigError);
    EXPECT_ERROR_CODE(parse("[smaa]\ncolour = blue\n"), ConfigError);
    try {
        (void)parse("[criteria]\n\nc1 = benefit x\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("bad.cfg:3"), std::string::npos) << e.what();
    }
    auto c = parse("[criteria]\nc1 = benefit 1\n[features]\nseasonality = point 1\n");
    EXPECT_ERROR_CODE(validate(c, FeatureRegistry{}), UnknownFeature);
    c = parse("[criteria]\nc1 = benefit 1\n[features]\ncurrent = remainder\ncv = remainder\n");
    EXPECT_ERROR_CODE(validate(c, FeatureRegistry{}), InvalidSampler);
}

TEST(Config, WriteParsesBack) {
    const auto c = load_config(testing_support::data_path("hdi.cfg"));
    std::ostringstream out;
    write_config(out, c);
    std::istringstream in(out.str());
    const auto d = parse_config(in);
    std::ostringstream again;
    write_config(again, d);
    EXPECT_EQ(out.str(), again.str());
    EXPECT_EQ(d.criterion_weights(), c.criterion_weights());
}

TEST(Pipeline, ConfigCriteriaMustMatchData) {
    std::istringstream data("alternative,criterion,time,value\na,c1,1,1\nb,c1,1,2\n");
    const auto records = parse_panel(data);
    std::istringstream cfg("[criteria]\nc1 = benefit 1\nc2 = benefit 1\n[features]\ncurrent = point 1\n");
    EXPECT_ERROR_CODE(prepare(records, parse_config(cfg)), ConfigError);
    const auto fallback = default_config(records);
    ASSERT_EQ(fallback.criteria.size(), 1u);
    EXPECT_EQ(fallback.criteria[0].direction, Direction::Benefit);
}

TEST(Pipeline, CriterionWeightsFollowTensorOrder) {
    std::istringstream data("alternative,criterion,time,value\na,x,1,1\na,y,1,2\nb,x,1,3\nb,y,1,1\n");
    const auto records = parse_panel(data);
    std::istringstream cfg("[criteria]\ny = cost 3\nx = benefit 1\n[features]\ncurrent = point 1\n");
    const auto a = prepare(records, parse_config(cfg));
    EXPECT_EQ(a.tensor.criterion_ids(), (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(a.criterion_weights, (std::vector<double>{0.25, 0.75}));
    EXPECT_EQ(a.tensor.directions(), (std::vector<Direction>{Direction::Benefit, Direction::Cost}));
}

TEST(Tables, NumberFormat) {
    EXPECT_EQ(format_number(0.0), "0.0000");
    EXPECT_EQ(format_number(-0.0), "0.0000");
    EXPECT_EQ(format_number(-1e-9), "0.0000");
    EXPECT_EQ(format_number(92.07), "92.0700");
    EXPECT_EQ(format_number(-0.25), "-0.2500");
    EXPECT_EQ(format_number(15062), "15062.0000");
}

TEST(Tables, EveryEmittedTableReparses) {
    const auto records = [] {
        std::ifstream in(testing_support::data_path("hdi.csv"));
        return parse_panel(in);
    }();
    auto config = load_config(testing_support::data_path("s5.cfg"));
    const auto analysis = prepare(records, config);

    std::ostringstream f;
    write_feature_table(f, analysis.features);
    expect_tables_reparse(f.str(), {"features"});

    const WeightScheme scheme{analysis.criterion_weights, std::vector<double>{0.55, 0.15, 0.15, 0.15}};
    const auto r = rank(analysis.features, scheme, {.keep_audit = true});
    std::ostringstream rk;
    write_ranking_table(rk, r, analysis.features.alternative_ids());
    rk << '\n';
    write_audit_tables(rk, *r.audit, r.closeness);
    expect_tables_reparse(rk.str(), {"ranking", "audit_tensor", "audit_ideals", "audit_distances"});

    SmaaOptions opt;
    opt.iterations = 500;
    const auto m = run_smaa(analysis.features, analysis.criterion_weights, analysis.sampler(), opt);
    std::ostringstream sm;
    write_percentage_table(sm, m);
    sm << '\n';
    write_smaa_record(sm, m);
    sm << '\n';
    write_most_likely_table(sm, most_likely_ranking(m), m.alternative_ids);
    expect_tables_reparse(sm.str(), {"percentages", "record", "most_likely"});

    std::ostringstream rv;
    write_reversal_report(rv, rank_reversal_demo());
    expect_tables_reparse(rv.str(), {"reversal", "record"});

    std::ostringstream pn;
    write_panel(pn, analysis.tensor);
    expect_tables_reparse(pn.str(), {"panel"});
}

TEST(Tables, RankingRowsByDescendingCloseness) {
    const auto records = [] {
        std::ifstream in(testing_support::data_path("hdi.csv"));
        return parse_panel(in);
    }();
    const auto analysis = prepare(records, load_config(testing_support::data_path("s4.cfg")));
    const auto r = rank(analysis.features, analysis.fixed_scheme());
    std::ostringstream out;
    write_ranking_table(out, r, analysis.features.alternative_ids());
    std::istringstream in(out.str());
    const auto t = read_tables(in).at(0);
    ASSERT_EQ(t.rows.size(), 10u);
    EXPECT_EQ(t.rows[0][0], "TR");
    EXPECT_EQ(t.rows[9][0], "ZA");
    for (std::size_t i = 1; i < t.rows.size(); ++i) EXPECT_GE(std::stod(t.rows[i - 1][1]), std::stod(t.rows[i][1]));
    EXPECT_EQ(t.rows[4][2], "5");
}

TEST(Tables, RejectsMalformed) {
    Table bad{{"alternative", "g", "position"}, {{"RU", "0.5", "x"}}};
    EXPECT_ERROR_CODE(validate_table(bad), ParseError);
    Table unknown{{"foo", "bar"}, {}};
    EXPECT_ERROR_CODE(validate_table(unknown), ParseError);
    Table ragged{{"alternative", "pct@1", "pct@2"}, {{"a", "50"}}};
    EXPECT_ERROR_CODE(validate_table(ragged), ParseError);
    Table gap{{"alternative", "pct@1", "pct@3"}, {}};
    EXPECT_ERROR_CODE(validate_table(gap), ParseError);
}

TEST(Tables, ExpectedFilesFollowTheirSchemas) {
    for (const char* name : {"features.csv", "rankings.csv", "smaa.csv"}) {
        std::ifstream in(testing_support::data_path(std::string("expected/") + name));
        const auto tables = read_tables(in);
        ASSERT_EQ(tables.size(), 1u) << name;
        EXPECT_NO_THROW(validate_table(tables[0])) << name;
    }
}

TEST(Reproduce, DeterministicAndRankingsMatch) {
    ReproduceOptions options;
    options.data_dir = TENSORTOPSIS_DATA_DIR;
    options.iterations = 3000;
    const auto a = reproduce(options);
    options.threads = 4;
    const auto b = reproduce(options);
    std::ostringstream x, y;
    write_reproduce_report(x, a);
    write_reproduce_report(y, b);
    EXPECT_EQ(x.str(), y.str());
    expect_tables_reparse(x.str(), {"checks", "strategy_rankings", "percentages", "record"});
    for (const auto& c : a.checks)
        if (c.name.starts_with("ranking/") || c.name.starts_with("smaa/")) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}
