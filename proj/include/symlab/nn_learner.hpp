// nn_learner.hpp -- the MLP wrapped as a randomized Learner
//
// The seed drives weight initialization and (for distributed encodings) the
// per-training codebook; the same seed and dataset reproduce the trained
// model bit-for-bit.

#pragma once

#include "symlab/encoding.hpp"
#include "symlab/lbfgs.hpp"
#include "symlab/learners.hpp"
#include "symlab/mlp.hpp"

namespace symlab {

struct MlpLearnerConfig {
    EncoderKind encoder = EncoderKind::localist;
    std::size_t code_length = 26; // k
    std::size_t hidden_layers = 1;
    std::size_t hidden_width = 256;
    LbfgsConfig lbfgs;            // default cap: 100 iterations
};

std::unique_ptr<Learner> make_mlp_learner(MlpLearnerConfig config);

/// The trained state behind an MLP learner; exposed so callers can persist
/// parameters or inspect the codebook.
class MlpModel final : public TrainedModel {
public:
    MlpModel(MlpParams params, EncoderSpec encoder, OptimizeResult training);

    double score(const Word& word) const override;

    const MlpParams& params() const { return params_; }
    const EncoderSpec& encoder() const { return encoder_; }
    const OptimizeResult& training() const { return training_; }

private:
    MlpParams params_;
    EncoderSpec encoder_;
    OptimizeResult training_;
};

} // namespace symlab
