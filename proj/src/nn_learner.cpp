#include "symlab/nn_learner.hpp"

#include <algorithm>

#include "symlab/rng.hpp"

namespace symlab {

MlpModel::MlpModel(MlpParams params, EncoderSpec encoder, OptimizeResult training)
    : params_(std::move(params)),
      encoder_(std::move(encoder)),
      training_(std::move(training)) {}

double MlpModel::score(const Word& word) const {
    return forward(params_, encode(word, encoder_));
}

namespace {

// seed stream tags within one training run
enum : std::uint64_t { kInitStream = 1, kCodebookStream = 2 };

class MlpLearner final : public Learner {
public:
    explicit MlpLearner(MlpLearnerConfig config)
        : name_("mlp"), config_(std::move(config)) {
        validate(config_.lbfgs);
    }

    const std::string& name() const override { return name_; }
    bool deterministic() const override { return false; }

    std::unique_ptr<TrainedModel> train(const RatedDataset& data,
                                        std::uint64_t seed) const override {
        if (data.empty()) throw Error("cannot train on an empty dataset");
        const Alphabet& alphabet = data.domain().alphabet();
        EncoderSpec encoder =
            config_.encoder == EncoderKind::localist
                ? localist_encoder(alphabet, config_.code_length)
                : fresh_distributed_codebook(alphabet, config_.code_length,
                                             derive_seed(seed, kCodebookStream));

        Batch batch;
        batch.reserve(data.size());
        for (const RatedWord& p : data) {
            batch.push_back(Example{encode(p.word, encoder), p.rating});
        }

        const NetConfig net{data.domain().word_length() * config_.code_length,
                            config_.hidden_layers, config_.hidden_width};
        MlpParams params = MlpParams::init(net, derive_seed(seed, kInitStream));

        MlpWorkspace ws;
        const ValueGradFn fg = [&](std::span<const double> x,
                                   std::span<double> grad_out) {
            std::copy(x.begin(), x.end(), params.flat().begin());
            return loss_and_grad(params, batch, grad_out, ws);
        };

        std::vector<double> x0(params.flat().begin(), params.flat().end());
        OptimizeResult result = minimize(fg, std::move(x0), config_.lbfgs);
        std::copy(result.final_point.begin(), result.final_point.end(),
                  params.flat().begin());
        return std::make_unique<MlpModel>(std::move(params), std::move(encoder),
                                          std::move(result));
    }

private:
    std::string name_;
    MlpLearnerConfig config_;
};

} // namespace

std::unique_ptr<Learner> make_mlp_learner(MlpLearnerConfig config) {
    return std::make_unique<MlpLearner>(std::move(config));
}

} // namespace symlab
