#include "symlab/learners.hpp"

#include <map>
#include <vector>

namespace symlab {

namespace {

class MemorizerModel final : public TrainedModel {
public:
    MemorizerModel(const RatedDataset& data, double default_score)
        : default_score_(default_score) {
        for (const RatedWord& p : data) {
            auto& [sum, count] = table_[p.word];
            sum += p.rating;
            count += 1;
        }
    }

    double score(const Word& word) const override {
        const auto it = table_.find(word);
        if (it == table_.end()) return default_score_;
        return it->second.first / static_cast<double>(it->second.second);
    }

private:
    std::map<Word, std::pair<double, std::size_t>> table_;
    double default_score_;
};

class Memorizer final : public Learner {
public:
    explicit Memorizer(double default_score)
        : name_("memorizer"), default_score_(default_score) {}

    const std::string& name() const override { return name_; }
    bool deterministic() const override { return true; }

    std::unique_ptr<TrainedModel> train(const RatedDataset& data,
                                        std::uint64_t) const override {
        return std::make_unique<MemorizerModel>(data, default_score_);
    }

private:
    std::string name_;
    double default_score_;
};

class PositionalUnigramModel final : public TrainedModel {
public:
    PositionalUnigramModel(const RatedDataset& data, double smoothing)
        : smoothing_(smoothing),
          positions_(data.domain().word_length()),
          sums_(positions_, std::vector<double>(data.domain().alphabet().size(), 0.0)),
          counts_(positions_, std::vector<std::size_t>(data.domain().alphabet().size(), 0)) {
        for (const RatedWord& p : data) {
            for (std::size_t i = 0; i < positions_; ++i) {
                sums_[i][p.word[i]] += p.rating;
                counts_[i][p.word[i]] += 1;
            }
        }
    }

    double score(const Word& word) const override {
        if (word.length() != positions_) {
            throw DomainError("word length does not match the training domain");
        }
        double total = 0.0;
        for (std::size_t i = 0; i < positions_; ++i) {
            if (word[i] >= sums_[i].size()) {
                throw DomainError("letter index outside the training alphabet");
            }
            const double num = sums_[i][word[i]] + smoothing_ * 0.5;
            const double den = static_cast<double>(counts_[i][word[i]]) + smoothing_;
            total += den > 0.0 ? num / den : 0.5;
        }
        return total / static_cast<double>(positions_);
    }

private:
    double smoothing_;
    std::size_t positions_;
    std::vector<std::vector<double>> sums_;
    std::vector<std::vector<std::size_t>> counts_;
};

class PositionalUnigram final : public Learner {
public:
    explicit PositionalUnigram(double smoothing)
        : name_("pos-unigram"), smoothing_(smoothing) {
        if (smoothing < 0.0) {
            throw Error("smoothing must be non-negative");
        }
    }

    const std::string& name() const override { return name_; }
    bool deterministic() const override { return true; }

    std::unique_ptr<TrainedModel> train(const RatedDataset& data,
                                        std::uint64_t) const override {
        return std::make_unique<PositionalUnigramModel>(data, smoothing_);
    }

private:
    std::string name_;
    double smoothing_;
};

class IdentityOracleModel final : public TrainedModel {
public:
    double score(const Word& word) const override {
        for (std::size_t i = 1; i < word.length(); ++i) {
            if (word[i] != word[0]) return 0.0;
        }
        return 1.0;
    }
};

class IdentityOracle final : public Learner {
public:
    IdentityOracle() : name_("identity-oracle") {}

    const std::string& name() const override { return name_; }
    bool deterministic() const override { return true; }

    std::unique_ptr<TrainedModel> train(const RatedDataset&,
                                        std::uint64_t) const override {
        return std::make_unique<IdentityOracleModel>();
    }

private:
    std::string name_;
};

} // namespace

std::unique_ptr<Learner> make_memorizer(double default_score) {
    return std::make_unique<Memorizer>(default_score);
}

std::unique_ptr<Learner> make_positional_unigram(double smoothing) {
    return std::make_unique<PositionalUnigram>(smoothing);
}

std::unique_ptr<Learner> make_identity_oracle() {
    return std::make_unique<IdentityOracle>();
}

} // namespace symlab
