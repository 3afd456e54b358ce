// dataset.hpp -- rated training data and its behavior under symmetries

#pragma once

#include <iosfwd>
#include <vector>

#include "symlab/symmetry.hpp"
#include "symlab/word.hpp"

namespace symlab {

struct RatedWord {
    Word word;
    double rating;

    bool operator==(const RatedWord&) const = default;
};

/// A multiset of word-rating pairs over one domain. Insertion order is kept
/// (it fixes iteration and CSV output), but equality and invariance compare
/// as multisets: order-insensitive, multiplicity-sensitive.
class RatedDataset {
public:
    explicit RatedDataset(WordDomain domain) : domain_(std::move(domain)) {}

    /// Validates the word's domain and that the rating is finite.
    void add(Word word, double rating);
    void add(std::string_view word_text, double rating);

    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    const RatedWord& operator[](std::size_t i) const { return pairs_[i]; }
    auto begin() const { return pairs_.begin(); }
    auto end() const { return pairs_.end(); }

    const WordDomain& domain() const { return domain_; }

    /// Multiset equality of pairs; ratings compare exactly (they are supplied
    /// constants, not computed floats).
    bool multiset_equal(const RatedDataset& other) const;

private:
    WordDomain domain_;
    std::vector<RatedWord> pairs_;
};

/// { <sigma(w), r> : <w, r> in data }; ratings untouched, order preserved.
RatedDataset apply_to_dataset(const Symmetry& sigma, const RatedDataset& data);

/// True iff sigma(data) has precisely the same word-rating pairs as data.
bool is_dataset_invariant(const Symmetry& sigma, const RatedDataset& data);

/// CSV round trip: header `word,rating`, ratings printed with %.17g so a
/// reload is bit-exact.
void save_dataset_csv(const RatedDataset& data, std::ostream& out);
RatedDataset load_dataset_csv(const WordDomain& domain, std::istream& in);

} // namespace symlab
