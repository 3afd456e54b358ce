#include <doctest.h>

#include "symlab/datagen.hpp"
#include "symlab/learners.hpp"
#include "symlab/rng.hpp"

using namespace symlab;

namespace {

RatedDataset make(const WordDomain& domain,
                  std::initializer_list<std::pair<const char*, double>> pairs) {
    RatedDataset data(domain);
    for (const auto& [w, r] : pairs) data.add(w, r);
    return data;
}

} // namespace

TEST_CASE("memorizer recalls, averages duplicates, and defaults") {
    const auto learner = make_memorizer(0.5);
    const RatedDataset eq1 = eq1_sample_dataset();
    const WordDomain& domain = eq1.domain();
    CHECK(learner->score(eq1, domain.parse("CC")) == 1.0);
    CHECK(learner->score(eq1, domain.parse("YY")) == 0.5); // unseen
    const RatedDataset dup = make(domain, {{"AB", 0}, {"AB", 1}});
    CHECK(learner->score(dup, domain.parse("AB")) == 0.5);
}

TEST_CASE("positional unigram: hand-computed example") {
    const WordDomain& domain = identity_task_domain();
    const auto learner = make_positional_unigram(0.0);
    const RatedDataset data = make(domain, {{"AA", 1}, {"AB", 0}});
    // pos 0: A seen with {1, 0} -> 0.5; pos 1: A seen with {1} -> 1.0
    CHECK(learner->score(data, domain.parse("AA")) == doctest::Approx(0.75));
}

TEST_CASE("positional unigram: empty data is the pure prior") {
    const WordDomain& domain = identity_task_domain();
    const auto learner = make_positional_unigram(1.0);
    const RatedDataset empty(domain);
    CHECK(learner->score(empty, domain.parse("QM")) == 0.5);
}

TEST_CASE("positional unigram scores YY and YZ alike after identity training") {
    const auto learner = make_positional_unigram(1.0);
    const RatedDataset data = identity_training_set(17);
    const WordDomain& domain = data.domain();
    CHECK(learner->score(data, domain.parse("YY")) ==
          learner->score(data, domain.parse("YZ")));
}

TEST_CASE("identity oracle knows the rule without any data") {
    const auto learner = make_identity_oracle();
    const WordDomain& domain = identity_task_domain();
    const RatedDataset empty(domain);
    CHECK(learner->score(empty, domain.parse("YY")) == 1.0);
    CHECK(learner->score(empty, domain.parse("AA")) == 1.0);
    CHECK(learner->score(empty, domain.parse("YZ")) == 0.0);
}

TEST_CASE("identity oracle exhibits non-invariance under yz-swap") {
    const auto learner = make_identity_oracle();
    const RatedDataset data = identity_training_set(3);
    const WordDomain& domain = data.domain();
    const Symmetry yz = yz_swap_symmetry(domain);
    const Word yy = domain.parse("YY");
    // L(sigma(D), sigma(YY)) = score(YZ) = 0, but L(D, YY) = 1
    const double lhs = learner->score(apply_to_dataset(yz, data), yz.apply(yy));
    const double rhs = learner->score(data, yy);
    CHECK(lhs == 0.0);
    CHECK(rhs == 1.0);
}

TEST_CASE("reference learners are exactly invariant on random data") {
    // property sweep: random datasets x builtin symmetries, exact equality
    const WordDomain& domain = identity_task_domain();
    const auto memorizer = make_memorizer();
    const auto unigram = make_positional_unigram(1.0);
    Rng rng(2025);

    std::vector<Symmetry> sigmas;
    sigmas.push_back(identity_symmetry(domain));
    sigmas.push_back(reversal_symmetry(domain));
    sigmas.push_back(yz_swap_symmetry(domain));
    for (int i = 0; i < 3; ++i) {
        std::vector<std::size_t> perm(26);
        for (std::size_t j = 0; j < 26; ++j) perm[j] = j;
        rng.shuffle(perm);
        sigmas.push_back(position_letter_perm(domain, rng.below(2), perm));
    }

    for (int trial = 0; trial < 6; ++trial) {
        RatedDataset data(domain);
        const std::size_t n = 3 + rng.below(10);
        for (std::size_t i = 0; i < n; ++i) {
            data.add(domain.word_at(rng.below(676)), rng.coin() ? 1.0 : 0.0);
        }
        for (const Symmetry& sigma : sigmas) {
            const RatedDataset mapped = apply_to_dataset(sigma, data);
            for (int k = 0; k < 20; ++k) {
                const Word w = domain.word_at(rng.below(676));
                REQUIRE(memorizer->score(mapped, sigma.apply(w)) ==
                        memorizer->score(data, w));
                REQUIRE(unigram->score(mapped, sigma.apply(w)) ==
                        unigram->score(data, w));
            }
        }
    }
}

TEST_CASE("deterministic learners ignore the seed") {
    const RatedDataset data = identity_training_set(1);
    const WordDomain& domain = data.domain();
    const auto learner = make_positional_unigram(1.0);
    CHECK(learner->deterministic());
    CHECK(learner->score(data, domain.parse("MM"), 1) ==
          learner->score(data, domain.parse("MM"), 999));
}
