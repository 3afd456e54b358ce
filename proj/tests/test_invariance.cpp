#include <doctest.h>

#include "symlab/datagen.hpp"
#include "symlab/invariance.hpp"
#include "symlab/nn_learner.hpp"

using namespace symlab;

namespace {

// a tiny, fast MLP learner for invariance plumbing tests
std::unique_ptr<Learner> tiny_mlp(EncoderKind encoder = EncoderKind::localist) {
    MlpLearnerConfig config;
    config.encoder = encoder;
    config.hidden_layers = 1;
    config.hidden_width = 8;
    config.lbfgs.max_iterations = 15;
    return make_mlp_learner(config);
}

// deterministic learner that deliberately peeks at letter identity
const Learner& oracle() {
    static const auto learner = make_identity_oracle();
    return *learner;
}

} // namespace

TEST_CASE("check_algorithm_invariance: memorizer is invariant everywhere") {
    const WordDomain domain = identity_task_domain();
    const auto learner = make_memorizer();
    const auto datasets = sample_datasets(domain, 3, 10, 99);
    const auto words = domain.enumerate();
    for (const char* name : {"reversal", "yz-swap", "pos-perm:0:(AQ)(MX)"}) {
        const InvarianceReport report = check_algorithm_invariance(
            *learner, symmetry_by_name(domain, name), datasets, words);
        CHECK(report.passed);
        CHECK(report.max_abs_deviation == 0.0);
        CHECK_FALSE(report.witness.has_value());
    }
}

TEST_CASE("check_algorithm_invariance flags the identity oracle with a witness") {
    const WordDomain domain = identity_task_domain();
    const std::vector<RatedDataset> datasets{identity_training_set(1)};
    const std::vector<Word> words{domain.parse("YY"), domain.parse("AA")};
    const InvarianceReport report = check_algorithm_invariance(
        oracle(), yz_swap_symmetry(domain), datasets, words);
    CHECK_FALSE(report.passed);
    CHECK(report.max_abs_deviation == 1.0);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->word == "YY");
    CHECK(report.witness->score_w == 1.0);
    CHECK(report.witness->score_sigma_w == 0.0);
}

TEST_CASE("check_algorithm_invariance refuses randomized learners") {
    const WordDomain domain = identity_task_domain();
    const auto learner = tiny_mlp();
    const std::vector<RatedDataset> datasets{eq1_sample_dataset()};
    const std::vector<Word> words{domain.parse("AA")};
    CHECK_THROWS_AS(check_algorithm_invariance(*learner, yz_swap_symmetry(domain),
                                               datasets, words),
                    PreconditionError);
}

TEST_CASE("theorem 1: positional unigram + yz-swap + identity data, deviation 0") {
    const RatedDataset data = identity_training_set(11);
    const auto learner = make_positional_unigram(1.0);
    const InvarianceReport report =
        theorem1_check(*learner, yz_swap_symmetry(data.domain()), data, "identity");
    CHECK(report.passed);
    CHECK(report.max_abs_deviation == 0.0);
    CHECK_FALSE(report.relaxed_tolerance);
}

TEST_CASE("theorem 1: memorizer + reversal + sonority data scores BA like AB") {
    const RatedDataset data = sonority_invariant_training_set();
    const auto learner = make_memorizer();
    const Symmetry rev = reversal_symmetry(data.domain());
    const InvarianceReport report = theorem1_check(*learner, rev, data, "sonority");
    CHECK(report.passed);
    CHECK(report.max_abs_deviation == 0.0);
    // the conclusion in the concrete: same score for BA and AB
    const auto model = learner->train(data, 0);
    CHECK(model->score(data.domain().parse("BA")) ==
          model->score(data.domain().parse("AB")));
}

TEST_CASE("theorem 1 gate: non-invariant learner is refused with a diagnostic") {
    const RatedDataset data = identity_training_set(2);
    try {
        theorem1_check(oracle(), yz_swap_symmetry(data.domain()), data, "identity");
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.hypothesis() == "algorithm-invariance");
    }
}

TEST_CASE("theorem 1 gate: non-invariant dataset is refused with a diagnostic") {
    const RatedDataset eq1 = eq1_sample_dataset();
    const auto learner = make_memorizer();
    try {
        theorem1_check(*learner, reversal_symmetry(eq1.domain()), eq1, "eq1");
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.hypothesis() == "dataset-invariance");
    }
}

TEST_CASE("theorem 1 gate: randomized learner is refused up front") {
    const RatedDataset data = identity_training_set(3);
    const auto learner = tiny_mlp();
    try {
        theorem1_check(*learner, yz_swap_symmetry(data.domain()), data, "identity");
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.hypothesis() == "learner-deterministic");
    }
}

TEST_CASE("theorem 2: deterministic learner degenerates to a zero-width interval") {
    const RatedDataset data = identity_training_set(4);
    const auto learner = make_positional_unigram(1.0);
    const InvarianceReport report =
        theorem2_check(*learner, yz_swap_symmetry(data.domain()), data,
                       data.domain().parse("YY"), 5, 42, "identity");
    CHECK(report.mode == CheckMode::expectation);
    CHECK(report.passed);
    CHECK(report.mean_difference == 0.0);
    CHECK(report.ci_halfwidth == 0.0);
    CHECK(report.n_samples == 5);
}

TEST_CASE("theorem 2: identity oracle fails with mean gap exactly 1") {
    const RatedDataset data = identity_training_set(5);
    const InvarianceReport report =
        theorem2_check(oracle(), yz_swap_symmetry(data.domain()), data,
                       data.domain().parse("YY"), 4, 1, "identity");
    CHECK_FALSE(report.passed);
    CHECK(report.mean_difference == 1.0);
    CHECK(report.ci_halfwidth == 0.0);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->score_w == 1.0);
    CHECK(report.witness->score_sigma_w == 0.0);
}

TEST_CASE("theorem 2 is seed-deterministic and enforces its preconditions") {
    const RatedDataset data = identity_training_set(6);
    const Symmetry yz = yz_swap_symmetry(data.domain());
    const Word yy = data.domain().parse("YY");
    const auto learner = tiny_mlp();

    const InvarianceReport a = theorem2_check(*learner, yz, data, yy, 3, 7, "identity");
    const InvarianceReport b = theorem2_check(*learner, yz, data, yy, 3, 7, "identity");
    CHECK(a.mean_difference == b.mean_difference);
    CHECK(a.ci_halfwidth == b.ci_halfwidth);
    CHECK(a.mean_score_w == b.mean_score_w);

    CHECK_THROWS_AS(theorem2_check(*learner, yz, data, yy, 1, 7, "identity"), Error);

    const RatedDataset eq1 = eq1_sample_dataset();
    try {
        theorem2_check(*learner, reversal_symmetry(eq1.domain()), eq1, yy, 3, 7, "eq1");
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(e.hypothesis() == "dataset-invariance");
    }
}

TEST_CASE("theorem 2 parallel execution matches serial") {
    const RatedDataset data = identity_training_set(8);
    const Symmetry yz = yz_swap_symmetry(data.domain());
    const Word yy = data.domain().parse("YY");
    const auto learner = tiny_mlp();
    const InvarianceReport serial =
        theorem2_check(*learner, yz, data, yy, 4, 3, "identity", 1);
    const InvarianceReport parallel =
        theorem2_check(*learner, yz, data, yy, 4, 3, "identity", 4);
    CHECK(serial.mean_difference == parallel.mean_difference);
    CHECK(serial.ci_halfwidth == parallel.ci_halfwidth);
}

TEST_CASE("reports serialize to JSON") {
    const RatedDataset data = identity_training_set(4);
    const auto learner = make_positional_unigram(1.0);
    const InvarianceReport report =
        theorem1_check(*learner, yz_swap_symmetry(data.domain()), data, "identity");
    const std::string json = to_json(report);
    CHECK(json.find("\"passed\":true") != std::string::npos);
    CHECK(json.find("\"mode\":\"deterministic\"") != std::string::npos);
    CHECK(json.find("\"symmetry\":\"yz-swap\"") != std::string::npos);
}

TEST_CASE("sampled probe datasets are seed-deterministic") {
    const WordDomain domain = identity_task_domain();
    const auto a = sample_datasets(domain, 2, 8, 5);
    const auto b = sample_datasets(domain, 2, 8, 5);
    REQUIRE(a.size() == 2);
    CHECK(a[0].multiset_equal(b[0]));
    CHECK(a[1].multiset_equal(b[1]));
    CHECK_FALSE(a[0].multiset_equal(a[1]));
}
