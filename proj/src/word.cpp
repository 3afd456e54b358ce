#include "symlab/word.hpp"

#include <limits>

namespace symlab {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw DomainError("alphabet must contain at least one letter");
    }
    index_.fill(-1);
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        const std::size_t b = byte(letters_[i]);
        if (index_[b] >= 0) {
            throw DomainError(std::string("duplicate letter '") + letters_[i] + "' in alphabet");
        }
        index_[b] = static_cast<std::int16_t>(i);
    }
}

Alphabet Alphabet::capital_az() { return Alphabet("ABCDEFGHIJKLMNOPQRSTUVWXYZ"); }

Alphabet Alphabet::sonority_task() { return Alphabet("AOWYMNVZBD"); }

std::size_t Alphabet::index_of(char c) const {
    const std::int16_t i = index_[byte(c)];
    if (i < 0) {
        throw DomainError(std::string("letter '") + c + "' is not in the alphabet");
    }
    return static_cast<std::size_t>(i);
}

WordDomain::WordDomain(Alphabet alphabet, std::size_t word_length)
    : alphabet_(std::move(alphabet)), word_length_(word_length) {
    if (word_length_ == 0) {
        throw DomainError("word length must be positive");
    }
    if (alphabet_.size() > 255) {
        throw DomainError("alphabet too large for 8-bit letter indices");
    }
}

std::size_t WordDomain::universe_size() const {
    constexpr std::size_t kCap = std::size_t{1} << 24;
    std::size_t n = 1;
    for (std::size_t i = 0; i < word_length_; ++i) {
        if (n > kCap / alphabet_.size()) {
            throw EnumerationTooLargeError("word universe exceeds the enumeration cap");
        }
        n *= alphabet_.size();
    }
    return n;
}

bool WordDomain::valid(const Word& w) const {
    if (w.length() != word_length_) return false;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (w[i] >= alphabet_.size()) return false;
    }
    return true;
}

void WordDomain::require(const Word& w) const {
    if (!valid(w)) {
        throw DomainError("word does not belong to this domain");
    }
}

std::size_t WordDomain::rank(const Word& w) const {
    require(w);
    std::size_t r = 0;
    for (std::size_t i = 0; i < word_length_; ++i) {
        r = r * alphabet_.size() + w[i];
    }
    return r;
}

Word WordDomain::word_at(std::size_t rank) const {
    std::vector<std::uint8_t> idx(word_length_);
    for (std::size_t i = word_length_; i-- > 0;) {
        idx[i] = static_cast<std::uint8_t>(rank % alphabet_.size());
        rank /= alphabet_.size();
    }
    if (rank != 0) {
        throw DomainError("rank out of range for this domain");
    }
    return Word(std::move(idx));
}

Word WordDomain::parse(std::string_view text) const {
    if (text.size() != word_length_) {
        throw DomainError("word '" + std::string(text) + "' has the wrong length for this domain");
    }
    std::vector<std::uint8_t> idx(word_length_);
    for (std::size_t i = 0; i < word_length_; ++i) {
        idx[i] = static_cast<std::uint8_t>(alphabet_.index_of(text[i]));
    }
    return Word(std::move(idx));
}

std::string WordDomain::format(const Word& w) const {
    require(w);
    std::string out(word_length_, '?');
    for (std::size_t i = 0; i < word_length_; ++i) {
        out[i] = alphabet_.letter(w[i]);
    }
    return out;
}

std::vector<Word> WordDomain::enumerate() const {
    const std::size_t n = universe_size();
    std::vector<Word> words;
    words.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        words.push_back(word_at(r));
    }
    return words;
}

std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t length) {
    return WordDomain(alphabet, length).enumerate();
}

} // namespace symlab
