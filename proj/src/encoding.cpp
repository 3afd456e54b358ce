#include "symlab/encoding.hpp"

#include <ostream>
#include <set>
#include <string>

#include "symlab/rng.hpp"

namespace symlab {

const char* to_string(EncoderKind kind) {
    return kind == EncoderKind::localist ? "localist" : "distributed";
}

EncoderKind encoder_kind_from_string(std::string_view name) {
    if (name == "localist") return EncoderKind::localist;
    if (name == "distributed") return EncoderKind::distributed;
    throw Error("unknown encoder kind '" + std::string(name) + "'");
}

EncoderSpec localist_encoder(const Alphabet& alphabet, std::size_t k) {
    if (k < alphabet.size()) {
        throw EncodingError("localist encoding needs k >= alphabet size");
    }
    EncoderSpec spec{EncoderKind::localist, k, alphabet, {}};
    spec.codebook.resize(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        spec.codebook[i].assign(k, 0);
        spec.codebook[i][i] = 1;
    }
    return spec;
}

EncoderSpec fresh_distributed_codebook(const Alphabet& alphabet, std::size_t k,
                                       std::uint64_t seed) {
    if (k == 0 || (k < 64 && ((std::uint64_t{1} << k) - 1) < alphabet.size())) {
        throw InfeasibleCodebookError(
            "only " + std::to_string(k < 64 ? (std::uint64_t{1} << k) - 1 : 0) +
            " distinct non-zero codes of length " + std::to_string(k) + " exist for " +
            std::to_string(alphabet.size()) + " letters");
    }
    Rng rng(seed);
    EncoderSpec spec{EncoderKind::distributed, k, alphabet, {}};
    spec.codebook.resize(alphabet.size());
    std::set<std::vector<std::uint8_t>> used;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        std::vector<std::uint8_t> code(k);
        for (;;) {
            bool any = false;
            for (std::size_t b = 0; b < k; ++b) {
                code[b] = static_cast<std::uint8_t>(rng.next_u64() >> 63);
                any = any || code[b] != 0;
            }
            if (any && used.insert(code).second) break;
        }
        spec.codebook[i] = std::move(code);
    }
    return spec;
}

std::vector<double> encode(const Word& word, const EncoderSpec& spec) {
    std::vector<double> bits;
    bits.reserve(word.length() * spec.code_length);
    for (std::size_t pos = 0; pos < word.length(); ++pos) {
        if (word[pos] >= spec.codebook.size()) {
            throw EncodingError("letter index " + std::to_string(word[pos]) +
                                " has no code in this codebook");
        }
        for (const std::uint8_t bit : spec.codebook[word[pos]]) {
            bits.push_back(bit ? 1.0 : 0.0);
        }
    }
    return bits;
}

void write_codebook_csv(const EncoderSpec& spec, std::ostream& out) {
    out << "letter,bitstring\n";
    for (std::size_t i = 0; i < spec.codebook.size(); ++i) {
        out << spec.alphabet.letter(i) << ',';
        for (const std::uint8_t bit : spec.codebook[i]) {
            out << (bit ? '1' : '0');
        }
        out << '\n';
    }
}

} // namespace symlab
