// datagen.hpp -- the task datasets: identity rule, sonority language, and
// the six-pair illustration set

#pragma once

#include <cstdint>
#include <map>

#include "symlab/dataset.hpp"

namespace symlab {

/// Two-letter words over A..Z; the identity task's universe.
WordDomain identity_task_domain();

/// Two-letter words over the ten-letter sonority alphabet.
WordDomain sonority_task_domain();

/// 72 pairs over A..Z: the 24 identical-letter words AA..XX rated 1, plus 48
/// distinct mismatched words drawn from A..X rated 0 (sampled without
/// replacement). No word contains Y or Z. Pure function of the seed.
RatedDataset identity_training_set(std::uint64_t seed);

/// The six generalization probes YY, ZZ, XY, YZ, XZ, ZY in that order; the
/// two X letters are drawn independently and uniformly from A..X.
std::vector<Word> test_battery(std::uint64_t seed);

/// Letter -> sonority scale value.
class SonorityTable {
public:
    explicit SonorityTable(std::map<char, int> values) : values_(std::move(values)) {}

    /// The canonical ten-letter table: A,O=5  W,Y=4  M,N=3  V,Z=2  B,D=1.
    static SonorityTable canonical();

    int sonority(char letter) const;

private:
    std::map<char, int> values_;
};

/// True iff the word's sonority is non-decreasing left to right (for
/// two-letter words: sonority(second) >= sonority(first)).
bool sonority_grammar(const WordDomain& domain, const Word& word,
                      const SonorityTable& table);

/// All equal-sonority two-letter words over the sonority alphabet, each rated
/// 1. 20 pairs; invariant under letter reversal by construction.
RatedDataset sonority_invariant_training_set();

/// The six illustration pairs: <CC,1> <AA,1> <EE,1> <GA,0> <EH,0> <RA,0>.
RatedDataset eq1_sample_dataset();

} // namespace symlab
