#include "symlab/invariance.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "symlab/parallel.hpp"
#include "symlab/rng.hpp"
#include "symlab/stats.hpp"

namespace symlab {

std::string to_json(const InvarianceReport& r) {
    nlohmann::json j{
        {"learner", r.learner_name},
        {"symmetry", r.symmetry_name},
        {"dataset", r.dataset_id},
        {"mode", r.mode == CheckMode::deterministic ? "deterministic" : "expectation"},
        {"passed", r.passed},
        {"max_abs_deviation", r.max_abs_deviation},
        {"relaxed_tolerance", r.relaxed_tolerance},
    };
    if (!r.note.empty()) j["note"] = r.note;
    if (r.witness) {
        j["witness"] = {{"word", r.witness->word},
                        {"score_w", r.witness->score_w},
                        {"score_sigma_w", r.witness->score_sigma_w}};
    }
    if (r.mode == CheckMode::expectation) {
        j["n_samples"] = r.n_samples;
        j["mean_difference"] = r.mean_difference;
        j["ci_halfwidth"] = r.ci_halfwidth;
        j["mean_score_w"] = r.mean_score_w;
        j["mean_score_sigma_w"] = r.mean_score_sigma_w;
    }
    return j.dump();
}

std::vector<RatedDataset> sample_datasets(const WordDomain& domain,
                                          std::size_t count,
                                          std::size_t words_per_dataset,
                                          std::uint64_t seed) {
    const std::size_t universe = domain.universe_size();
    words_per_dataset = std::min(words_per_dataset, universe);
    std::vector<RatedDataset> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Rng rng(derive_seed(seed, k));
        std::vector<std::size_t> ranks(universe);
        for (std::size_t i = 0; i < universe; ++i) ranks[i] = i;
        ranks = rng.sample_without_replacement(std::move(ranks), words_per_dataset);
        RatedDataset data(domain);
        for (const std::size_t r : ranks) {
            data.add(domain.word_at(r), rng.coin() ? 1.0 : 0.0);
        }
        out.push_back(std::move(data));
    }
    return out;
}

InvarianceReport check_algorithm_invariance(const Learner& learner,
                                            const Symmetry& sigma,
                                            std::span<const RatedDataset> datasets,
                                            std::span<const Word> words,
                                            std::string dataset_id) {
    if (!learner.deterministic()) {
        throw PreconditionError("learner-deterministic",
                                "algorithm invariance is checked exactly; learner '" +
                                    learner.name() + "' is randomized");
    }
    InvarianceReport report;
    report.learner_name = learner.name();
    report.symmetry_name = sigma.name();
    report.dataset_id = std::move(dataset_id);
    report.mode = CheckMode::deterministic;
    for (const RatedDataset& data : datasets) {
        const RatedDataset mapped = apply_to_dataset(sigma, data);
        const auto model = learner.train(data, 0);
        const auto mapped_model = learner.train(mapped, 0);
        for (const Word& w : words) {
            const double lhs = model->score(w);
            const double rhs = mapped_model->score(sigma.apply(w));
            const double dev = std::abs(rhs - lhs);
            if (dev > report.max_abs_deviation) {
                report.max_abs_deviation = dev;
                report.witness = Witness{data.domain().format(w), lhs, rhs};
            }
        }
    }
    report.passed = report.max_abs_deviation == 0.0;
    return report;
}

InvarianceReport theorem1_check(const Learner& learner, const Symmetry& sigma,
                                const RatedDataset& data, std::string dataset_id,
                                std::uint64_t probe_seed) {
    if (!(sigma.domain() == data.domain())) {
        throw DomainError("symmetry and dataset live on different domains");
    }
    if (!learner.deterministic()) {
        throw PreconditionError("learner-deterministic",
                                "theorem 1 covers deterministic learners; '" +
                                    learner.name() + "' is randomized");
    }

    // hypothesis: the algorithm is invariant under sigma (checked on the
    // dataset under test plus sampled probe datasets, over the whole domain)
    const std::vector<Word> all_words = data.domain().enumerate();
    std::vector<RatedDataset> probes =
        sample_datasets(data.domain(), 3, std::min<std::size_t>(12, data.domain().universe_size()),
                        probe_seed);
    probes.insert(probes.begin(), data);
    const InvarianceReport hypothesis =
        check_algorithm_invariance(learner, sigma, probes, all_words, "probe-grid");
    if (!hypothesis.passed) {
        std::string detail = "learner '" + learner.name() + "' is not invariant under '" +
                             sigma.name() + "'";
        if (hypothesis.witness) {
            detail += " (witness " + hypothesis.witness->word + ": " +
                      std::to_string(hypothesis.witness->score_w) + " vs " +
                      std::to_string(hypothesis.witness->score_sigma_w) + ")";
        }
        throw PreconditionError("algorithm-invariance", detail);
    }

    if (!is_dataset_invariant(sigma, data)) {
        throw PreconditionError("dataset-invariance",
                                "dataset '" + dataset_id + "' is not invariant under '" +
                                    sigma.name() + "'");
    }

    InvarianceReport report;
    report.learner_name = learner.name();
    report.symmetry_name = sigma.name();
    report.dataset_id = std::move(dataset_id);
    report.mode = CheckMode::deterministic;

    const auto model = learner.train(data, 0);
    for (const Word& w : all_words) {
        const double lhs = model->score(w);
        const double rhs = model->score(sigma.apply(w));
        const double dev = std::abs(rhs - lhs);
        if (dev > report.max_abs_deviation) {
            report.max_abs_deviation = dev;
            report.witness = Witness{data.domain().format(w), lhs, rhs};
        }
    }
    if (report.max_abs_deviation == 0.0) {
        report.passed = true;
        report.witness.reset();
    } else if (report.max_abs_deviation <= 1e-12) {
        report.passed = true;
        report.relaxed_tolerance = true;
        report.note = "scores equal only to 1e-12; data ordering broke bit-exactness";
        report.witness.reset();
    } else {
        report.passed = false;
    }
    return report;
}

InvarianceReport theorem2_check(const Learner& learner, const Symmetry& sigma,
                                const RatedDataset& data, const Word& word,
                                std::size_t n_reps, std::uint64_t seed,
                                std::string dataset_id, std::size_t jobs) {
    if (!(sigma.domain() == data.domain())) {
        throw DomainError("symmetry and dataset live on different domains");
    }
    if (n_reps < 2) throw Error("theorem2_check needs at least 2 repetitions");
    if (!is_dataset_invariant(sigma, data)) {
        throw PreconditionError("dataset-invariance",
                                "dataset '" + dataset_id + "' is not invariant under '" +
                                    sigma.name() + "'");
    }
    data.domain().require(word);
    const Word mapped_word = sigma.apply(word);

    std::vector<double> score_w(n_reps);
    std::vector<double> score_sw(n_reps);
    parallel_for(n_reps, jobs, [&](std::size_t r) {
        const auto model = learner.train(data, derive_seed(seed, r));
        score_w[r] = model->score(word);
        score_sw[r] = model->score(mapped_word);
    });

    std::vector<double> diffs(n_reps);
    for (std::size_t r = 0; r < n_reps; ++r) diffs[r] = score_w[r] - score_sw[r];

    InvarianceReport report;
    report.learner_name = learner.name();
    report.symmetry_name = sigma.name();
    report.dataset_id = std::move(dataset_id);
    report.mode = CheckMode::expectation;
    report.n_samples = n_reps;
    report.mean_difference = mean(diffs);
    report.ci_halfwidth = ci95_halfwidth(diffs);
    report.mean_score_w = mean(score_w);
    report.mean_score_sigma_w = mean(score_sw);
    report.max_abs_deviation = std::abs(report.mean_difference);
    report.passed = report.max_abs_deviation <= report.ci_halfwidth;
    if (!report.passed) {
        report.witness = Witness{data.domain().format(word), report.mean_score_w,
                                 report.mean_score_sigma_w};
    }
    return report;
}

} // namespace symlab
