// symlab -- experiment runner and invariance checker
//
// Subcommands:
//   run       execute an experiment grid from a JSON config (flags override)
//   check     run a theorem-1 or theorem-2 invariance check
//   report    render SVG panels / text tables from a stored run
//   dataset   emit one of the generated datasets as CSV
//   symmetry  apply, verify, or map symmetries over words and datasets
//
// Exit codes: 0 success, 1 check failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symlab/datagen.hpp"
#include "symlab/encoding.hpp"
#include "symlab/experiment.hpp"
#include "symlab/invariance.hpp"
#include "symlab/nn_learner.hpp"
#include "symlab/report.hpp"
#include "symlab/rng.hpp"

namespace {

using namespace symlab;

WordDomain domain_by_name(const std::string& name, std::size_t length) {
    if (name == "az") return WordDomain(Alphabet::capital_az(), length);
    if (name == "sonority") return WordDomain(Alphabet::sonority_task(), length);
    return WordDomain(Alphabet(name), length); // explicit letter list
}

struct DatasetChoice {
    RatedDataset data;
    std::string id;
};

DatasetChoice dataset_by_name(const std::string& name, std::uint64_t seed) {
    if (name == "identity") return {identity_training_set(seed), "identity"};
    if (name == "sonority") return {sonority_invariant_training_set(), "sonority"};
    if (name == "eq1") return {eq1_sample_dataset(), "eq1"};
    throw Error("unknown dataset '" + name + "' (known: identity, sonority, eq1)");
}

std::unique_ptr<Learner> learner_by_name(const std::string& name, double smoothing,
                                         double default_score,
                                         const MlpLearnerConfig& mlp) {
    if (name == "memorizer") return make_memorizer(default_score);
    if (name == "pos-unigram") return make_positional_unigram(smoothing);
    if (name == "identity-oracle") return make_identity_oracle();
    if (name == "mlp") return make_mlp_learner(mlp);
    throw Error("unknown learner '" + name +
                "' (known: memorizer, pos-unigram, identity-oracle, mlp)");
}

void apply_seed_env(std::uint64_t& seed) {
    if (const char* env = std::getenv("SYMLAB_SEED")) {
        seed = std::strtoull(env, nullptr, 10);
    }
}

int cmd_run(const std::string& config_path, std::uint64_t seed, bool seed_set,
            std::size_t reps, std::size_t width, const std::vector<std::size_t>& layers,
            const std::vector<std::string>& encodings, const std::string& out_dir,
            std::size_t jobs, bool jobs_set, std::size_t iterations, bool iters_set) {
    ExperimentConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw Error("cannot open config '" + config_path + "'");
        config = load_experiment_config(in);
    }
    if (seed_set) config.master_seed = seed;
    if (reps != 0) config.repetitions = reps;
    if (width != 0) config.hidden_width = width;
    if (!layers.empty()) config.hidden_layers_list = layers;
    if (!encodings.empty()) {
        config.encodings.clear();
        for (const auto& e : encodings) config.encodings.push_back(encoder_kind_from_string(e));
    }
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (jobs_set) config.jobs = jobs;
    if (iters_set) config.lbfgs.max_iterations = iterations;
    apply_seed_env(config.master_seed);
    if (config.output_dir.empty()) config.output_dir = "runs/latest";

    const ScoreReport report = run_experiment(config);
    std::cout << render_text_table(report);
    std::cout << "run written to " << config.output_dir;
    if (report.failure_count > 0) {
        std::cout << " (" << report.failure_count << " failed repetitions excluded)";
    }
    std::cout << '\n';
    return 0;
}

int cmd_check(int theorem, const std::string& learner_name,
              const std::string& symmetry_name, const std::string& dataset_name,
              const std::string& word_text, std::size_t reps, std::uint64_t seed,
              std::size_t jobs, const std::string& json_path, double smoothing,
              double default_score, MlpLearnerConfig mlp) {
    apply_seed_env(seed);
    const DatasetChoice chosen = dataset_by_name(dataset_name, derive_seed(seed, 1));
    const Symmetry sigma = symmetry_by_name(chosen.data.domain(), symmetry_name);
    const auto learner = learner_by_name(learner_name, smoothing, default_score, mlp);

    InvarianceReport report;
    try {
        if (theorem == 1) {
            report = theorem1_check(*learner, sigma, chosen.data, chosen.id,
                                    derive_seed(seed, 2));
        } else {
            const Word word = chosen.data.domain().parse(word_text);
            report = theorem2_check(*learner, sigma, chosen.data, word, reps,
                                    derive_seed(seed, 3), chosen.id, jobs);
        }
    } catch (const PreconditionError& e) {
        std::cout << "precondition failed [" << e.hypothesis() << "]: " << e.what()
                  << '\n';
        if (!json_path.empty()) {
            std::ofstream out(json_path);
            out << "{\"precondition_failed\":\"" << e.hypothesis() << "\"}\n";
        }
        return 1;
    }

    if (report.mode == CheckMode::deterministic) {
        std::cout << "theorem 1 [" << report.learner_name << " / " << report.symmetry_name
                  << " / " << report.dataset_id
                  << "]: max |L(D,w) - L(D,sigma(w))| = " << report.max_abs_deviation;
        if (report.relaxed_tolerance) std::cout << " (1e-12 relaxation engaged)";
    } else {
        std::cout << "theorem 2 [" << report.learner_name << " / " << report.symmetry_name
                  << " / " << report.dataset_id << " / n=" << report.n_samples
                  << "]: mean diff = " << report.mean_difference
                  << ", 95% CI half-width = " << report.ci_halfwidth;
    }
    std::cout << (report.passed ? " -> PASS" : " -> FAIL") << '\n';
    if (report.witness) {
        std::cout << "witness " << report.witness->word << ": " << report.witness->score_w
                  << " vs " << report.witness->score_sigma_w << '\n';
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << to_json(report) << '\n';
    }
    return report.passed ? 0 : 1;
}

int cmd_report(const std::string& run_dir, const std::string& style,
               std::string out_dir) {
    std::ifstream in(std::filesystem::path(run_dir) / "per_repetition.csv");
    if (!in) throw Error("no per_repetition.csv under '" + run_dir + "'");
    const ScoreReport report = load_per_repetition_csv(in);
    if (out_dir.empty()) out_dir = run_dir;
    std::vector<std::string> files;
    if (style == "bars-svg" || style == "both") {
        const auto svg = render_report(report, out_dir, ReportStyle::bars_svg);
        files.insert(files.end(), svg.begin(), svg.end());
    }
    if (style == "table-text" || style == "both") {
        const auto txt = render_report(report, out_dir, ReportStyle::table_text);
        files.insert(files.end(), txt.begin(), txt.end());
        std::cout << render_text_table(report);
    }
    for (const auto& f : files) std::cout << "wrote " << f << '\n';
    return 0;
}

int cmd_dataset(const std::string& name, std::uint64_t seed,
                const std::string& out_path) {
    apply_seed_env(seed);
    const DatasetChoice chosen = dataset_by_name(name, seed);
    if (out_path.empty() || out_path == "-") {
        save_dataset_csv(chosen.data, std::cout);
    } else {
        std::ofstream out(out_path);
        save_dataset_csv(chosen.data, out);
        std::cout << "wrote " << out_path << '\n';
    }
    return 0;
}

int cmd_symmetry(const std::string& name, const std::string& alphabet,
                 std::size_t length, const std::string& apply_word, bool verify,
                 const std::string& map_csv, const std::string& invariant_csv,
                 const std::string& out_path) {
    const WordDomain domain = domain_by_name(alphabet, length);
    const Symmetry sigma = symmetry_by_name(domain, name);
    if (!apply_word.empty()) {
        std::cout << domain.format(sigma.apply(domain.parse(apply_word))) << '\n';
        return 0;
    }
    if (verify) {
        const bool ok = verify_bijection(sigma);
        std::cout << sigma.name() << (ok ? " is a bijection on " : " is NOT a bijection on ")
                  << domain.universe_size() << " words\n";
        return ok ? 0 : 1;
    }
    const auto load = [&](const std::string& path) {
        if (path == "-") return load_dataset_csv(domain, std::cin);
        std::ifstream in(path);
        if (!in) throw Error("cannot open '" + path + "'");
        return load_dataset_csv(domain, in);
    };
    if (!map_csv.empty()) {
        const RatedDataset mapped = apply_to_dataset(sigma, load(map_csv));
        if (out_path.empty() || out_path == "-") {
            save_dataset_csv(mapped, std::cout);
        } else {
            std::ofstream out(out_path);
            save_dataset_csv(mapped, out);
        }
        return 0;
    }
    if (!invariant_csv.empty()) {
        const bool invariant = is_dataset_invariant(sigma, load(invariant_csv));
        std::cout << (invariant ? "invariant\n" : "not invariant\n");
        return invariant ? 0 : 1;
    }
    throw Error("pick one action: --apply, --verify, --map-csv, or --invariant-csv");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry lab: invariance theorems and identity-rule experiments"};
    app.require_subcommand(1);

    // --- run ---
    auto* run = app.add_subcommand("run", "execute an experiment grid");
    std::string run_config, run_out;
    std::uint64_t run_seed = 0;
    std::size_t run_reps = 0, run_width = 0, run_jobs = 0, run_iters = 0;
    std::vector<std::size_t> run_layers;
    std::vector<std::string> run_encodings;
    run->add_option("--config", run_config, "JSON config file");
    auto* seed_opt = run->add_option("--seed", run_seed, "master seed (env SYMLAB_SEED wins)");
    run->add_option("--reps", run_reps, "repetitions per grid cell");
    run->add_option("--width", run_width, "hidden width");
    run->add_option("--layers", run_layers, "hidden depths, e.g. --layers 1 2 3");
    run->add_option("--encodings", run_encodings, "localist and/or distributed")
        ->check(CLI::IsMember({"localist", "distributed"}));
    run->add_option("--out", run_out, "output directory");
    auto* jobs_opt = run->add_option("--jobs", run_jobs, "max parallel trainings");
    auto* iters_opt = run->add_option("--iterations", run_iters, "optimizer iteration cap");

    // --- check ---
    auto* check = app.add_subcommand("check", "run an invariance theorem check");
    int thm = 1;
    std::string c_learner = "pos-unigram", c_symmetry = "yz-swap", c_dataset = "identity";
    std::string c_word = "YY", c_json;
    std::size_t c_reps = 40, c_jobs = 0;
    std::uint64_t c_seed = 1;
    double c_smoothing = 1.0, c_default = 0.5;
    MlpLearnerConfig c_mlp;
    std::string c_encoding = "localist";
    check->add_option("--theorem", thm, "1 (exact) or 2 (statistical)")
        ->check(CLI::IsMember({1, 2}));
    check->add_option("--learner", c_learner, "memorizer|pos-unigram|identity-oracle|mlp");
    check->add_option("--symmetry", c_symmetry,
                      "identity|reversal|yz-swap|pos-perm:<position>:<cycle-spec>");
    check->add_option("--dataset", c_dataset, "identity|sonority|eq1");
    check->add_option("--word", c_word, "probe word for theorem 2");
    check->add_option("--reps", c_reps, "repetitions for theorem 2");
    check->add_option("--seed", c_seed, "seed (env SYMLAB_SEED wins)");
    check->add_option("--jobs", c_jobs, "parallel trainings for theorem 2");
    check->add_option("--json", c_json, "write the report as JSON here");
    check->add_option("--smoothing", c_smoothing, "pos-unigram smoothing");
    check->add_option("--default-score", c_default, "memorizer unseen-word score");
    check->add_option("--encoding", c_encoding, "mlp: localist|distributed")
        ->check(CLI::IsMember({"localist", "distributed"}));
    check->add_option("--layers", c_mlp.hidden_layers, "mlp: hidden layers");
    check->add_option("--width", c_mlp.hidden_width, "mlp: hidden width");
    check->add_option("--iterations", c_mlp.lbfgs.max_iterations, "mlp: optimizer cap");

    // --- report ---
    auto* rep = app.add_subcommand("report", "render stored run results");
    std::string r_dir, r_style = "both", r_out;
    rep->add_option("--run-dir", r_dir, "directory with per_repetition.csv")->required();
    rep->add_option("--style", r_style, "bars-svg|table-text|both")
        ->check(CLI::IsMember({"bars-svg", "table-text", "both"}));
    rep->add_option("--out", r_out, "output directory (default: run dir)");

    // --- dataset ---
    auto* ds = app.add_subcommand("dataset", "emit a generated dataset as CSV");
    std::string d_name = "identity", d_out;
    std::uint64_t d_seed = 1;
    ds->add_option("--name", d_name, "identity|sonority|eq1");
    ds->add_option("--seed", d_seed, "seed for the identity training sample");
    ds->add_option("--out", d_out, "output file ('-' = stdout)");

    // --- symmetry ---
    auto* sym = app.add_subcommand("symmetry", "apply or verify symmetries");
    std::string s_name = "reversal", s_alphabet = "az", s_apply, s_map, s_inv, s_out;
    std::size_t s_length = 2;
    bool s_verify = false;
    sym->add_option("--name", s_name, "symmetry name");
    sym->add_option("--alphabet", s_alphabet, "az|sonority|<letters>");
    sym->add_option("--length", s_length, "word length");
    sym->add_option("--apply", s_apply, "map one word");
    sym->add_flag("--verify", s_verify, "exhaustive bijectivity check");
    sym->add_option("--map-csv", s_map, "apply to a dataset CSV ('-' = stdin)");
    sym->add_option("--invariant-csv", s_inv, "test dataset invariance");
    sym->add_option("--out", s_out, "output file for --map-csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // help exits 0, every parse problem is usage error
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_config, run_seed, seed_opt->count() > 0, run_reps,
                           run_width, run_layers, run_encodings, run_out, run_jobs,
                           jobs_opt->count() > 0, run_iters, iters_opt->count() > 0);
        }
        if (check->parsed()) {
            c_mlp.encoder = encoder_kind_from_string(c_encoding);
            return cmd_check(thm, c_learner, c_symmetry, c_dataset, c_word, c_reps,
                             c_seed, c_jobs, c_json, c_smoothing, c_default, c_mlp);
        }
        if (rep->parsed()) return cmd_report(r_dir, r_style, r_out);
        if (ds->parsed()) return cmd_dataset(d_name, d_seed, d_out);
        if (sym->parsed()) {
            return cmd_symmetry(s_name, s_alphabet, s_length, s_apply, s_verify, s_map,
                                s_inv, s_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
