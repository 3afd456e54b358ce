// encoding.hpp -- localist (1-of-k) and distributed binary letter codes

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "symlab/word.hpp"

namespace symlab {

enum class EncoderKind { localist, distributed };

const char* to_string(EncoderKind kind);
EncoderKind encoder_kind_from_string(std::string_view name);

/// Letter -> k-bit code table. Localist codes are 1-of-k; distributed codes
/// are arbitrary but pairwise distinct and non-zero (a zero code or a
/// collision would make two letters indistinguishable to a learner).
struct EncoderSpec {
    EncoderKind kind;
    std::size_t code_length;                       // k
    Alphabet alphabet;
    std::vector<std::vector<std::uint8_t>> codebook; // codebook[letter][bit], 0/1

    bool operator==(const EncoderSpec& other) const {
        return kind == other.kind && code_length == other.code_length &&
               alphabet == other.alphabet && codebook == other.codebook;
    }
};

/// 1-of-k codes: letter i gets bit i. Requires k >= |alphabet|.
EncoderSpec localist_encoder(const Alphabet& alphabet, std::size_t k);

/// Distributed codes sampled uniformly from the non-zero k-bit strings,
/// resampled until pairwise distinct. Pure function of (alphabet, k, seed).
/// Throws InfeasibleCodebookError when 2^k - 1 < |alphabet|.
EncoderSpec fresh_distributed_codebook(const Alphabet& alphabet, std::size_t k,
                                       std::uint64_t seed);

/// Concatenated per-letter codes as 0.0/1.0 values; length = word length * k.
std::vector<double> encode(const Word& word, const EncoderSpec& spec);

/// Audit dump: one `letter,bitstring` row per letter.
void write_codebook_csv(const EncoderSpec& spec, std::ostream& out);

} // namespace symlab
