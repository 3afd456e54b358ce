#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symlab/experiment.hpp"
#include "symlab/report.hpp"

using namespace symlab;

namespace {

// deliberately small: 8-unit nets, 10 optimizer iterations, 3 reps
ExperimentConfig smoke_config() {
    ExperimentConfig config;
    config.master_seed = 313;
    config.repetitions = 3;
    config.hidden_layers_list = {1};
    config.hidden_width = 8;
    config.lbfgs.max_iterations = 10;
    config.jobs = 2;
    return config;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("experiment smoke run: shape, aggregation, CSV round trip") {
    const ExperimentConfig config = smoke_config();
    const ScoreReport report = run_experiment(config);
    REQUIRE(report.cells.size() == 2); // localist + distributed, 1 layer
    CHECK(report.failure_count == 0);
    for (const CellReport& cell : report.cells) {
        REQUIRE(cell.reps.size() == 3);
        for (const RepetitionScores& rep : cell.reps) {
            CHECK_FALSE(rep.failed);
            CHECK(rep.battery_words[0] == "YY");
            CHECK(rep.battery_words[1] == "ZZ");
            CHECK(rep.battery_words[3] == "YZ");
            CHECK(rep.battery_words[5] == "ZY");
            for (const double s : rep.battery_scores) {
                CHECK(s > 0.0);
                CHECK(s < 1.0);
            }
        }
    }

    // aggregates must be recomputable from the per-repetition rows
    std::stringstream csv;
    write_per_repetition_csv(report, csv);
    const ScoreReport loaded = load_per_repetition_csv(csv);
    const auto direct = aggregate(report);
    const auto from_csv = aggregate(loaded);
    REQUIRE(direct.size() == from_csv.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(direct[i].category == from_csv[i].category);
        CHECK(direct[i].stats.n == from_csv[i].stats.n);
        CHECK(std::abs(direct[i].stats.mean - from_csv[i].stats.mean) <= 1e-12);
        CHECK(std::abs(direct[i].stats.stddev - from_csv[i].stats.stddev) <= 1e-12);
        CHECK(std::abs(direct[i].stats.ci95 - from_csv[i].stats.ci95) <= 1e-12);
    }
}

TEST_CASE("same master seed twice: byte-identical per-repetition CSV") {
    const ExperimentConfig config = smoke_config();
    std::stringstream a, b;
    write_per_repetition_csv(run_experiment(config), a);
    write_per_repetition_csv(run_experiment(config), b);
    CHECK(a.str() == b.str());

    ExperimentConfig other = config;
    other.master_seed += 1;
    std::stringstream c;
    write_per_repetition_csv(run_experiment(other), c);
    CHECK(a.str() != c.str());
}

TEST_CASE("sub-grids reproduce full-grid repetitions") {
    ExperimentConfig full = smoke_config();
    full.repetitions = 2;
    ExperimentConfig sub = full;
    sub.encodings = {EncoderKind::distributed};
    const ScoreReport full_report = run_experiment(full);
    const ScoreReport sub_report = run_experiment(sub);
    const CellReport& a = find_cell(full_report, EncoderKind::distributed, 1);
    const CellReport& b = find_cell(sub_report, EncoderKind::distributed, 1);
    for (std::size_t r = 0; r < 2; ++r) {
        CHECK(a.reps[r].battery_scores == b.reps[r].battery_scores);
        CHECK(a.reps[r].train_pos_mean == b.reps[r].train_pos_mean);
    }
}

TEST_CASE("run_experiment writes config, per-repetition and aggregate files") {
    const auto dir = std::filesystem::temp_directory_path() / "symlab_run_test";
    std::filesystem::remove_all(dir);
    ExperimentConfig config = smoke_config();
    config.encodings = {EncoderKind::localist};
    config.output_dir = dir.string();
    const ScoreReport report = run_experiment(config);

    REQUIRE(std::filesystem::exists(dir / "config.resolved.json"));
    REQUIRE(std::filesystem::exists(dir / "per_repetition.csv"));
    REQUIRE(std::filesystem::exists(dir / "aggregate.csv"));

    std::stringstream expected;
    write_per_repetition_csv(report, expected);
    CHECK(slurp(dir / "per_repetition.csv") == expected.str());

    const std::string aggregate_csv = slurp(dir / "aggregate.csv");
    CHECK(aggregate_csv.rfind("encoding,layers,category,mean,std,ci95,n\n", 0) == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("config JSON round trip and schema gate") {
    ExperimentConfig config = smoke_config();
    config.output_dir = "runs/x";
    config.lbfgs.memory = 7;
    std::stringstream buffer(to_json(config));
    const ExperimentConfig back = load_experiment_config(buffer);
    CHECK(back.master_seed == config.master_seed);
    CHECK(back.repetitions == config.repetitions);
    CHECK(back.hidden_layers_list == config.hidden_layers_list);
    CHECK(back.hidden_width == config.hidden_width);
    CHECK(back.encodings == config.encodings);
    CHECK(back.lbfgs.memory == 7);
    CHECK(back.output_dir == "runs/x");

    std::stringstream bad("{\"schema_version\": 2}");
    CHECK_THROWS_AS(load_experiment_config(bad), Error);
}

TEST_CASE("renderers: eight bars per panel, text table, files on disk") {
    ExperimentConfig config = smoke_config();
    config.repetitions = 2;
    config.encodings = {EncoderKind::localist};
    const ScoreReport report = run_experiment(config);

    const std::string svg = render_svg_panel(report.cells[0]);
    std::size_t bars = 0;
    for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
         pos = svg.find("<rect", pos + 1)) {
        ++bars;
    }
    CHECK(bars == 9); // background + 8 category bars
    for (const char* category : kCategories) {
        CHECK(svg.find(">" + std::string(category) + "<") != std::string::npos);
    }

    const std::string table = render_text_table(report);
    CHECK(table.find("train-pos") != std::string::npos);
    CHECK(table.find("localist encoding, 1 hidden layer(s)") != std::string::npos);

    const auto dir = std::filesystem::temp_directory_path() / "symlab_render_test";
    std::filesystem::remove_all(dir);
    const auto svgs = render_report(report, dir.string(), ReportStyle::bars_svg);
    REQUIRE(svgs.size() == 1);
    CHECK(std::filesystem::exists(svgs[0]));
    const auto texts = render_report(report, dir.string(), ReportStyle::table_text);
    REQUIRE(texts.size() == 1);
    CHECK(slurp(texts[0]) == table);
    std::filesystem::remove_all(dir);

    CHECK_THROWS_AS(render_report(ScoreReport{}, dir.string(), ReportStyle::bars_svg),
                    Error);
}

TEST_CASE("bar length encodes the score linearly") {
    // a hand-built cell with zero variance: whiskers collapse, bar spans
    // exactly mean * plot width
    CellReport cell;
    cell.encoding = EncoderKind::localist;
    cell.layers = 1;
    for (int r = 0; r < 3; ++r) {
        RepetitionScores rep;
        rep.repetition = static_cast<std::size_t>(r);
        rep.battery_words = {"YY", "ZZ", "AY", "YZ", "AZ", "ZY"};
        rep.battery_scores = {1.0, 0.5, 0.5, 0.5, 0.5, 0.5};
        rep.train_pos_mean = 1.0;
        rep.train_neg_mean = 0.0;
        cell.reps.push_back(rep);
    }
    const std::string svg = render_svg_panel(cell);
    // score 1.0 spans the full 520-px plot area
    CHECK(svg.find("width=\"520.00\"") != std::string::npos);
    // score 0.5 spans half
    CHECK(svg.find("width=\"260.00\"") != std::string::npos);
    // zero-variance whisker has zero width: identical endpoints at the mean
    CHECK(svg.find("x1=\"670.00\" y1=\"59.0\" x2=\"670.00\"") != std::string::npos);
}
