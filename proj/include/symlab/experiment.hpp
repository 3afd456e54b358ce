// experiment.hpp -- the 40-repetition training grid and its score reports

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "symlab/encoding.hpp"
#include "symlab/lbfgs.hpp"
#include "symlab/stats.hpp"

namespace symlab {

struct ExperimentConfig {
    std::uint64_t master_seed = 1;
    std::size_t repetitions = 40;
    std::vector<std::size_t> hidden_layers_list = {1, 2, 3};
    std::size_t hidden_width = 256;
    std::vector<EncoderKind> encodings = {EncoderKind::localist,
                                          EncoderKind::distributed};
    LbfgsConfig lbfgs;
    std::string output_dir; // empty = compute only, write nothing
    std::size_t jobs = 0;   // 0 = hardware concurrency
};

/// JSON config document with a schema_version header; unknown keys are
/// ignored, missing keys keep their defaults.
ExperimentConfig load_experiment_config(std::istream& in);
std::string to_json(const ExperimentConfig& config);

/// Score categories in report order: the two training bars, then the six
/// generalization probes.
inline constexpr std::array<const char*, 8> kCategories = {
    "train-pos", "train-neg", "YY", "ZZ", "XY", "YZ", "XZ", "ZY"};

struct RepetitionScores {
    std::size_t repetition = 0;
    bool failed = false;
    std::array<std::string, 6> battery_words{}; // actual probe words
    std::array<double, 6> battery_scores{};
    double train_pos_mean = 0.0; // mean score over the 24 rating-1 words
    double train_neg_mean = 0.0; // mean score over the 48 rating-0 words
};

struct CellReport {
    EncoderKind encoding = EncoderKind::localist;
    std::size_t layers = 1;
    std::vector<RepetitionScores> reps;
};

struct ScoreReport {
    std::vector<CellReport> cells;
    std::size_t failure_count = 0;
};

/// Trains every (encoding, layers, repetition) task of the grid. Each task's
/// seed is derived from (master_seed, encoding, layers, repetition) alone, so
/// sub-grids reproduce the full grid's repetitions. Numeric failures mark the
/// repetition failed and training continues; a cell with more than 20%
/// failures aborts the experiment. When output_dir is set, writes
/// config.resolved.json, per_repetition.csv and aggregate.csv.
ScoreReport run_experiment(const ExperimentConfig& config);

struct AggregateRow {
    EncoderKind encoding;
    std::size_t layers;
    std::string category;
    Summary stats;
};

/// Per-category summaries over the non-failed repetitions of each cell.
std::vector<AggregateRow> aggregate(const ScoreReport& report);

/// Row format: encoding,layers,repetition,category,word,score. The training
/// means carry "-" in the word column; a failed repetition is one row with
/// category "failed". Scores print as %.17g, so identical runs produce
/// byte-identical files.
void write_per_repetition_csv(const ScoreReport& report, std::ostream& out);
ScoreReport load_per_repetition_csv(std::istream& in);

/// Row format: encoding,layers,category,mean,std,ci95,n.
void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out);

/// Fetches a cell by coordinates; throws Error when absent.
const CellReport& find_cell(const ScoreReport& report, EncoderKind encoding,
                            std::size_t layers);

/// Convenience: per-category values of one cell over non-failed reps, in
/// kCategories order.
std::array<std::vector<double>, 8> cell_category_values(const CellReport& cell);

} // namespace symlab
