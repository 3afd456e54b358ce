#include "symlab/experiment.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>

#include <nlohmann/json.hpp>

#include "symlab/datagen.hpp"
#include "symlab/nn_learner.hpp"
#include "symlab/parallel.hpp"
#include "symlab/rng.hpp"

namespace symlab {

namespace {

// seed stream tags inside one repetition
enum : std::uint64_t { kDatasetStream = 11, kBatteryStream = 12, kLearnerStream = 13 };

std::uint64_t repetition_seed(const ExperimentConfig& config, EncoderKind encoding,
                              std::size_t layers, std::size_t rep) {
    return derive_seed(config.master_seed,
                       encoding == EncoderKind::localist ? 1u : 2u, layers, rep);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ExperimentConfig load_experiment_config(std::istream& in) {
    nlohmann::json j;
    in >> j;
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1) {
        throw Error("config must declare schema_version 1");
    }
    ExperimentConfig cfg;
    if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<std::uint64_t>();
    if (j.contains("repetitions")) cfg.repetitions = j["repetitions"].get<std::size_t>();
    if (j.contains("hidden_layers")) {
        cfg.hidden_layers_list = j["hidden_layers"].get<std::vector<std::size_t>>();
    }
    if (j.contains("hidden_width")) cfg.hidden_width = j["hidden_width"].get<std::size_t>();
    if (j.contains("encodings")) {
        cfg.encodings.clear();
        for (const auto& e : j["encodings"]) {
            cfg.encodings.push_back(encoder_kind_from_string(e.get<std::string>()));
        }
    }
    if (j.contains("lbfgs")) {
        const auto& l = j["lbfgs"];
        if (l.contains("memory")) cfg.lbfgs.memory = l["memory"].get<std::size_t>();
        if (l.contains("max_iterations")) {
            cfg.lbfgs.max_iterations = l["max_iterations"].get<std::size_t>();
        }
        if (l.contains("grad_tolerance")) {
            cfg.lbfgs.grad_tolerance = l["grad_tolerance"].get<double>();
        }
        if (l.contains("wolfe_c1")) cfg.lbfgs.wolfe_c1 = l["wolfe_c1"].get<double>();
        if (l.contains("wolfe_c2")) cfg.lbfgs.wolfe_c2 = l["wolfe_c2"].get<double>();
        if (l.contains("max_line_search_steps")) {
            cfg.lbfgs.max_line_search_steps = l["max_line_search_steps"].get<std::size_t>();
        }
    }
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<std::size_t>();
    return cfg;
}

std::string to_json(const ExperimentConfig& cfg) {
    nlohmann::json encodings = nlohmann::json::array();
    for (const EncoderKind e : cfg.encodings) encodings.push_back(to_string(e));
    const nlohmann::json j{
        {"schema_version", 1},
        {"master_seed", cfg.master_seed},
        {"repetitions", cfg.repetitions},
        {"hidden_layers", cfg.hidden_layers_list},
        {"hidden_width", cfg.hidden_width},
        {"encodings", encodings},
        {"lbfgs",
         {{"memory", cfg.lbfgs.memory},
          {"max_iterations", cfg.lbfgs.max_iterations},
          {"grad_tolerance", cfg.lbfgs.grad_tolerance},
          {"wolfe_c1", cfg.lbfgs.wolfe_c1},
          {"wolfe_c2", cfg.lbfgs.wolfe_c2},
          {"max_line_search_steps", cfg.lbfgs.max_line_search_steps}}},
        {"output_dir", cfg.output_dir},
        {"jobs", cfg.jobs},
    };
    return j.dump(2);
}

ScoreReport run_experiment(const ExperimentConfig& config) {
    if (config.repetitions < 1) throw Error("repetitions must be >= 1");
    if (config.encodings.empty()) throw Error("at least one encoding is required");
    if (config.hidden_layers_list.empty()) throw Error("at least one depth is required");
    validate(config.lbfgs);

    ScoreReport report;
    for (const EncoderKind encoding : config.encodings) {
        for (const std::size_t layers : config.hidden_layers_list) {
            validate(NetConfig{52, layers, config.hidden_width});
            CellReport cell;
            cell.encoding = encoding;
            cell.layers = layers;
            cell.reps.resize(config.repetitions);
            report.cells.push_back(std::move(cell));
        }
    }

    const std::size_t n_tasks = report.cells.size() * config.repetitions;
    parallel_for(n_tasks, config.jobs, [&](std::size_t task) {
        CellReport& cell = report.cells[task / config.repetitions];
        const std::size_t rep = task % config.repetitions;
        RepetitionScores& out = cell.reps[rep];
        out.repetition = rep;

        const std::uint64_t seed =
            repetition_seed(config, cell.encoding, cell.layers, rep);
        const RatedDataset data =
            identity_training_set(derive_seed(seed, kDatasetStream));
        const std::vector<Word> battery =
            test_battery(derive_seed(seed, kBatteryStream));

        MlpLearnerConfig learner_config;
        learner_config.encoder = cell.encoding;
        learner_config.hidden_layers = cell.layers;
        learner_config.hidden_width = config.hidden_width;
        learner_config.lbfgs = config.lbfgs;
        learner_config.lbfgs.trace_path.clear(); // traces are per-minimize, not per-grid

        const auto learner = make_mlp_learner(learner_config);
        try {
            const auto model = learner->train(data, derive_seed(seed, kLearnerStream));
            for (std::size_t i = 0; i < battery.size(); ++i) {
                out.battery_words[i] = data.domain().format(battery[i]);
                out.battery_scores[i] = model->score(battery[i]);
            }
            double pos_sum = 0.0, neg_sum = 0.0;
            std::size_t pos_n = 0, neg_n = 0;
            for (const RatedWord& p : data) {
                const double s = model->score(p.word);
                if (p.rating >= 0.5) {
                    pos_sum += s;
                    ++pos_n;
                } else {
                    neg_sum += s;
                    ++neg_n;
                }
            }
            out.train_pos_mean = pos_sum / static_cast<double>(pos_n);
            out.train_neg_mean = neg_sum / static_cast<double>(neg_n);
        } catch (const NumericError&) {
            out.failed = true;
        }
    });

    for (const CellReport& cell : report.cells) {
        std::size_t failed = 0;
        for (const RepetitionScores& rep : cell.reps) failed += rep.failed ? 1 : 0;
        report.failure_count += failed;
        if (failed * 5 > cell.reps.size()) {
            throw Error("experiment error: cell " + std::string(to_string(cell.encoding)) +
                        "/" + std::to_string(cell.layers) + " lost " +
                        std::to_string(failed) + " of " + std::to_string(cell.reps.size()) +
                        " repetitions");
        }
    }

    if (!config.output_dir.empty()) {
        const std::filesystem::path dir(config.output_dir);
        std::filesystem::create_directories(dir);
        {
            std::ofstream out(dir / "config.resolved.json");
            out << to_json(config) << '\n';
        }
        {
            std::ofstream out(dir / "per_repetition.csv");
            write_per_repetition_csv(report, out);
        }
        {
            std::ofstream out(dir / "aggregate.csv");
            write_aggregate_csv(aggregate(report), out);
        }
    }
    return report;
}

std::array<std::vector<double>, 8> cell_category_values(const CellReport& cell) {
    std::array<std::vector<double>, 8> values;
    for (const RepetitionScores& rep : cell.reps) {
        if (rep.failed) continue;
        values[0].push_back(rep.train_pos_mean);
        values[1].push_back(rep.train_neg_mean);
        for (std::size_t i = 0; i < 6; ++i) values[2 + i].push_back(rep.battery_scores[i]);
    }
    return values;
}

std::vector<AggregateRow> aggregate(const ScoreReport& report) {
    std::vector<AggregateRow> rows;
    for (const CellReport& cell : report.cells) {
        const auto values = cell_category_values(cell);
        for (std::size_t c = 0; c < kCategories.size(); ++c) {
            rows.push_back(AggregateRow{cell.encoding, cell.layers, kCategories[c],
                                        summarize(values[c])});
        }
    }
    return rows;
}

void write_per_repetition_csv(const ScoreReport& report, std::ostream& out) {
    out << "encoding,layers,repetition,category,word,score\n";
    for (const CellReport& cell : report.cells) {
        const std::string prefix =
            std::string(to_string(cell.encoding)) + ',' + std::to_string(cell.layers) + ',';
        for (const RepetitionScores& rep : cell.reps) {
            const std::string rep_prefix = prefix + std::to_string(rep.repetition) + ',';
            if (rep.failed) {
                out << rep_prefix << "failed,-,nan\n";
                continue;
            }
            out << rep_prefix << "train-pos,-," << format_double(rep.train_pos_mean) << '\n';
            out << rep_prefix << "train-neg,-," << format_double(rep.train_neg_mean) << '\n';
            for (std::size_t i = 0; i < 6; ++i) {
                out << rep_prefix << kCategories[2 + i] << ',' << rep.battery_words[i]
                    << ',' << format_double(rep.battery_scores[i]) << '\n';
            }
        }
    }
}

ScoreReport load_per_repetition_csv(std::istream& in) {
    ScoreReport report;
    std::map<std::pair<std::string, std::size_t>, std::size_t> cell_index;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.rfind("encoding,", 0) == 0) continue;
        }
        std::array<std::string, 6> fields;
        std::size_t start = 0;
        for (std::size_t f = 0; f < 6; ++f) {
            const std::size_t comma = f + 1 < 6 ? line.find(',', start) : line.size();
            if (comma == std::string::npos) throw Error("malformed row '" + line + "'");
            fields[f] = line.substr(start, comma - start);
            start = comma + 1;
        }
        const EncoderKind encoding = encoder_kind_from_string(fields[0]);
        const std::size_t layers = std::stoul(fields[1]);
        const std::size_t rep = std::stoul(fields[2]);
        const std::string& category = fields[3];
        const double score = std::strtod(fields[5].c_str(), nullptr);

        const auto key = std::make_pair(fields[0], layers);
        if (!cell_index.contains(key)) {
            cell_index[key] = report.cells.size();
            report.cells.push_back(CellReport{encoding, layers, {}});
        }
        CellReport& cell = report.cells[cell_index[key]];
        if (cell.reps.size() <= rep) cell.reps.resize(rep + 1);
        RepetitionScores& out = cell.reps[rep];
        out.repetition = rep;
        if (category == "failed") {
            out.failed = true;
            ++report.failure_count;
        } else if (category == "train-pos") {
            out.train_pos_mean = score;
        } else if (category == "train-neg") {
            out.train_neg_mean = score;
        } else {
            bool known = false;
            for (std::size_t i = 0; i < 6; ++i) {
                if (category == kCategories[2 + i]) {
                    out.battery_scores[i] = score;
                    out.battery_words[i] = fields[4];
                    known = true;
                    break;
                }
            }
            if (!known) throw Error("unknown category '" + category + "'");
        }
    }
    if (report.cells.empty()) throw Error("per-repetition CSV is empty");
    return report;
}

void write_aggregate_csv(const std::vector<AggregateRow>& rows, std::ostream& out) {
    out << "encoding,layers,category,mean,std,ci95,n\n";
    for (const AggregateRow& row : rows) {
        out << to_string(row.encoding) << ',' << row.layers << ',' << row.category << ','
            << format_double(row.stats.mean) << ',' << format_double(row.stats.stddev)
            << ',' << format_double(row.stats.ci95) << ',' << row.stats.n << '\n';
    }
}

const CellReport& find_cell(const ScoreReport& report, EncoderKind encoding,
                            std::size_t layers) {
    for (const CellReport& cell : report.cells) {
        if (cell.encoding == encoding && cell.layers == layers) return cell;
    }
    throw Error("no such cell in the report");
}

} // namespace symlab
