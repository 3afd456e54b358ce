// word.hpp -- alphabets, fixed-length words, and the enumerable word universe

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symlab/errors.hpp"

namespace symlab {

/// Ordered list of distinct letters. Iteration order is stable and defines
/// each letter's index.
class Alphabet {
public:
    explicit Alphabet(std::string letters);

    /// A..Z (the 26 capitals).
    static Alphabet capital_az();

    /// The ten-letter sonority-task alphabet: A O W Y M N V Z B D.
    static Alphabet sonority_task();

    std::size_t size() const { return letters_.size(); }
    char letter(std::size_t index) const { return letters_.at(index); }
    const std::string& letters() const { return letters_; }

    bool contains(char c) const { return index_[byte(c)] >= 0; }

    /// Index of a letter; throws DomainError for letters outside the alphabet.
    std::size_t index_of(char c) const;

    bool operator==(const Alphabet& other) const { return letters_ == other.letters_; }

private:
    static std::size_t byte(char c) { return static_cast<unsigned char>(c); }

    std::string letters_;
    std::array<std::int16_t, 256> index_{};
};

/// A fixed-length sequence of alphabet indices. Plain data; the owning
/// WordDomain knows the alphabet and validates bounds.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<std::uint8_t> indices) : indices_(std::move(indices)) {}

    std::size_t length() const { return indices_.size(); }
    std::uint8_t operator[](std::size_t pos) const { return indices_[pos]; }
    std::uint8_t& operator[](std::size_t pos) { return indices_[pos]; }
    const std::vector<std::uint8_t>& indices() const { return indices_; }

    auto operator<=>(const Word&) const = default;

private:
    std::vector<std::uint8_t> indices_;
};

/// The universe W: all words of a fixed length over one alphabet,
/// enumerable in lexicographic index order at desk scale.
class WordDomain {
public:
    WordDomain(Alphabet alphabet, std::size_t word_length);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t word_length() const { return word_length_; }

    /// |alphabet|^length. Throws EnumerationTooLargeError beyond the
    /// desk-scale cap (2^24 words).
    std::size_t universe_size() const;

    bool valid(const Word& w) const;

    /// Throws DomainError if `w` does not belong to this domain.
    void require(const Word& w) const;

    /// Lexicographic index of a word, position 0 most significant.
    std::size_t rank(const Word& w) const;
    Word word_at(std::size_t rank) const;

    Word parse(std::string_view text) const;
    std::string format(const Word& w) const;

    /// All universe_size() words in lexicographic order.
    std::vector<Word> enumerate() const;

    bool operator==(const WordDomain& other) const {
        return word_length_ == other.word_length_ && alphabet_ == other.alphabet_;
    }

private:
    Alphabet alphabet_;
    std::size_t word_length_;
};

/// Materializes W for exhaustive checks; lexicographic order of indices.
std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t length);

} // namespace symlab
