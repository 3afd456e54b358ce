#include "symlab/datagen.hpp"

#include "symlab/rng.hpp"

namespace symlab {

namespace {
constexpr std::size_t kTrainedLetters = 24; // A..X
}

WordDomain identity_task_domain() { return WordDomain(Alphabet::capital_az(), 2); }

WordDomain sonority_task_domain() { return WordDomain(Alphabet::sonority_task(), 2); }

RatedDataset identity_training_set(std::uint64_t seed) {
    RatedDataset data(identity_task_domain());
    for (std::uint8_t i = 0; i < kTrainedLetters; ++i) {
        data.add(Word({i, i}), 1.0);
    }
    std::vector<Word> mismatched;
    mismatched.reserve(kTrainedLetters * (kTrainedLetters - 1));
    for (std::uint8_t a = 0; a < kTrainedLetters; ++a) {
        for (std::uint8_t b = 0; b < kTrainedLetters; ++b) {
            if (a != b) mismatched.push_back(Word({a, b}));
        }
    }
    Rng rng(seed);
    for (Word& w : rng.sample_without_replacement(std::move(mismatched), 48)) {
        data.add(std::move(w), 0.0);
    }
    return data;
}

std::vector<Word> test_battery(std::uint64_t seed) {
    const WordDomain domain = identity_task_domain();
    const auto y = static_cast<std::uint8_t>(domain.alphabet().index_of('Y'));
    const auto z = static_cast<std::uint8_t>(domain.alphabet().index_of('Z'));
    Rng rng(seed);
    const auto x1 = static_cast<std::uint8_t>(rng.below(kTrainedLetters));
    const auto x2 = static_cast<std::uint8_t>(rng.below(kTrainedLetters));
    return {Word({y, y}), Word({z, z}), Word({x1, y}),
            Word({y, z}), Word({x2, z}), Word({z, y})};
}

SonorityTable SonorityTable::canonical() {
    return SonorityTable({{'A', 5}, {'O', 5}, {'W', 4}, {'Y', 4}, {'M', 3},
                          {'N', 3}, {'V', 2}, {'Z', 2}, {'B', 1}, {'D', 1}});
}

int SonorityTable::sonority(char letter) const {
    const auto it = values_.find(letter);
    if (it == values_.end()) {
        throw Error(std::string("letter '") + letter + "' has no sonority value");
    }
    return it->second;
}

bool sonority_grammar(const WordDomain& domain, const Word& word,
                      const SonorityTable& table) {
    domain.require(word);
    for (std::size_t i = 0; i + 1 < word.length(); ++i) {
        const int left = table.sonority(domain.alphabet().letter(word[i]));
        const int right = table.sonority(domain.alphabet().letter(word[i + 1]));
        if (right < left) return false;
    }
    return true;
}

RatedDataset sonority_invariant_training_set() {
    const WordDomain domain = sonority_task_domain();
    const SonorityTable table = SonorityTable::canonical();
    RatedDataset data(domain);
    for (const Word& w : domain.enumerate()) {
        const int s0 = table.sonority(domain.alphabet().letter(w[0]));
        const int s1 = table.sonority(domain.alphabet().letter(w[1]));
        if (s0 == s1) data.add(w, 1.0);
    }
    return data;
}

RatedDataset eq1_sample_dataset() {
    RatedDataset data(identity_task_domain());
    data.add("CC", 1.0);
    data.add("AA", 1.0);
    data.add("EE", 1.0);
    data.add("GA", 0.0);
    data.add("EH", 0.0);
    data.add("RA", 0.0);
    return data;
}

} // namespace symlab
