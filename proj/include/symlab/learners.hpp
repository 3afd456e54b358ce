// learners.hpp -- the L(D, w) contract and reference learners
//
// A learner separates into train (expensive, seed-aware) and score (cheap,
// pure). The reference learners here make the invariance theorems concretely
// satisfiable or violable: memorizer and the positional unigram are exactly
// invariant; identity_oracle is the deliberate counterexample.

#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "symlab/dataset.hpp"

namespace symlab {

/// Immutable trained state. score is a pure function of (model, word).
class TrainedModel {
public:
    virtual ~TrainedModel() = default;
    virtual double score(const Word& word) const = 0;
};

class Learner {
public:
    virtual ~Learner() = default;

    virtual const std::string& name() const = 0;

    /// Deterministic learners ignore the seed; train is a pure function of
    /// the dataset alone.
    virtual bool deterministic() const = 0;

    virtual std::unique_ptr<TrainedModel> train(const RatedDataset& data,
                                                std::uint64_t seed) const = 0;

    /// L(D, w): train-then-score convenience.
    double score(const RatedDataset& data, const Word& word,
                 std::uint64_t seed = 0) const {
        return train(data, seed)->score(word);
    }
};

/// Scores a word by the mean rating of its exact occurrences in the training
/// data; `default_score` for unseen words. Treats words as opaque tokens, so
/// it is invariant under every symmetry.
std::unique_ptr<Learner> make_memorizer(double default_score = 0.5);

/// Per-position letter statistics with additive smoothing toward 0.5:
/// score(w) = mean over positions i of
///   (rating sum of pairs whose word has w[i] at i + smoothing * 0.5)
///   / (count of such pairs + smoothing).
/// Invariant under position-wise letter permutations and position swaps.
std::unique_ptr<Learner> make_positional_unigram(double smoothing = 1.0);

/// Ignores the data; 1.0 iff all letters of the word are equal. Violates
/// invariance under yz-swap by construction (the negative control).
std::unique_ptr<Learner> make_identity_oracle();

} // namespace symlab
