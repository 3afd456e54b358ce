#include "symlab/symmetry.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace symlab {

Symmetry::Symmetry(WordDomain domain, std::string name, std::vector<std::uint32_t> table)
    : domain_(std::move(domain)), name_(std::move(name)), table_(std::move(table)) {
    const std::size_t n = domain_.universe_size();
    if (table_.size() != n) {
        throw DomainError("symmetry table size does not match the domain");
    }
    // build the inverse when the table is a permutation
    std::vector<std::uint32_t> inv(n, UINT32_MAX);
    bool bijective = true;
    for (std::size_t r = 0; r < n && bijective; ++r) {
        if (table_[r] >= n || inv[table_[r]] != UINT32_MAX) {
            bijective = false;
        } else {
            inv[table_[r]] = static_cast<std::uint32_t>(r);
        }
    }
    if (bijective) inverse_ = std::move(inv);
}

Symmetry Symmetry::from_function(const WordDomain& domain, std::string name,
                                 const std::function<Word(const Word&)>& forward) {
    const std::size_t n = domain.universe_size();
    std::vector<std::uint32_t> table(n);
    for (std::size_t r = 0; r < n; ++r) {
        const Word image = forward(domain.word_at(r));
        if (!domain.valid(image)) {
            throw DomainError("symmetry '" + name + "' maps a word outside its domain");
        }
        table[r] = static_cast<std::uint32_t>(domain.rank(image));
    }
    return Symmetry(domain, std::move(name), std::move(table));
}

Symmetry Symmetry::from_table(WordDomain domain, std::string name,
                              std::vector<std::uint32_t> table) {
    return Symmetry(std::move(domain), std::move(name), std::move(table));
}

Word Symmetry::apply(const Word& w) const {
    return domain_.word_at(table_[domain_.rank(w)]);
}

Word Symmetry::apply_inverse(const Word& w) const {
    if (inverse_.empty()) {
        throw Error("symmetry '" + name_ + "' is not a bijection; no inverse exists");
    }
    return domain_.word_at(inverse_[domain_.rank(w)]);
}

bool Symmetry::is_bijection() const { return !inverse_.empty(); }

bool verify_bijection(const Symmetry& sigma) {
    const std::size_t n = sigma.domain().universe_size();
    std::vector<bool> hit(n, false);
    for (std::size_t r = 0; r < n; ++r) {
        const std::uint32_t img = sigma.image_rank(r);
        if (img >= n || hit[img]) return false;
        hit[img] = true;
    }
    return true;
}

Symmetry compose(const Symmetry& a, const Symmetry& b) {
    if (!(a.domain() == b.domain())) {
        throw DomainError("cannot compose symmetries over different domains");
    }
    const std::size_t n = a.domain().universe_size();
    std::vector<std::uint32_t> table(n);
    for (std::size_t r = 0; r < n; ++r) {
        table[r] = a.image_rank(b.image_rank(r));
    }
    return Symmetry::from_table(a.domain(), a.name() + "∘" + b.name(), std::move(table));
}

Symmetry identity_symmetry(const WordDomain& domain) {
    std::vector<std::uint32_t> table(domain.universe_size());
    std::iota(table.begin(), table.end(), 0u);
    return Symmetry::from_table(domain, "identity", std::move(table));
}

Symmetry reversal_symmetry(const WordDomain& domain) {
    return Symmetry::from_function(domain, "reversal", [](const Word& w) {
        std::vector<std::uint8_t> idx(w.indices().rbegin(), w.indices().rend());
        return Word(std::move(idx));
    });
}

Symmetry yz_swap_symmetry(const WordDomain& domain) {
    if (domain.word_length() < 2) {
        throw DomainError("yz-swap needs words of length >= 2");
    }
    const std::size_t y = domain.alphabet().index_of('Y');
    const std::size_t z = domain.alphabet().index_of('Z');
    std::vector<std::size_t> perm(domain.alphabet().size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::swap(perm[y], perm[z]);
    return position_letter_perm(domain, 1, perm, "yz-swap");
}

Symmetry position_letter_perm(const WordDomain& domain, std::size_t position,
                              const std::vector<std::size_t>& letter_perm,
                              std::string name) {
    if (position >= domain.word_length()) {
        throw DomainError("position out of range for this domain");
    }
    if (letter_perm.size() != domain.alphabet().size()) {
        throw DomainError("letter permutation size does not match the alphabet");
    }
    std::vector<bool> hit(letter_perm.size(), false);
    for (const std::size_t img : letter_perm) {
        if (img >= letter_perm.size() || hit[img]) {
            throw DomainError("letter map is not a permutation of the alphabet");
        }
        hit[img] = true;
    }
    if (name.empty()) {
        name = "pos-perm@" + std::to_string(position);
    }
    return Symmetry::from_function(domain, std::move(name), [&](const Word& w) {
        Word out = w;
        out[position] = static_cast<std::uint8_t>(letter_perm[w[position]]);
        return out;
    });
}

std::vector<std::size_t> parse_letter_cycles(const Alphabet& alphabet,
                                             std::string_view cycles) {
    std::vector<std::size_t> perm(alphabet.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<bool> seen(alphabet.size(), false);

    std::size_t i = 0;
    while (i < cycles.size()) {
        if (cycles[i] != '(') {
            throw Error("cycle spec must be a sequence of parenthesized cycles, e.g. (YZ)");
        }
        const std::size_t close = cycles.find(')', i);
        if (close == std::string_view::npos || close == i + 1) {
            throw Error("malformed cycle in '" + std::string(cycles) + "'");
        }
        std::vector<std::size_t> cycle;
        for (std::size_t p = i + 1; p < close; ++p) {
            const std::size_t letter = alphabet.index_of(cycles[p]);
            if (seen[letter]) {
                throw Error(std::string("letter '") + cycles[p] + "' appears twice in cycle spec");
            }
            seen[letter] = true;
            cycle.push_back(letter);
        }
        for (std::size_t p = 0; p < cycle.size(); ++p) {
            perm[cycle[p]] = cycle[(p + 1) % cycle.size()];
        }
        i = close + 1;
    }
    return perm;
}

Symmetry symmetry_by_name(const WordDomain& domain, std::string_view name) {
    if (name == "identity") return identity_symmetry(domain);
    if (name == "reversal") return reversal_symmetry(domain);
    if (name == "yz-swap") return yz_swap_symmetry(domain);
    if (name.starts_with("pos-perm:")) {
        const std::string_view rest = name.substr(9);
        const std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos) {
            throw Error("expected pos-perm:<position>:<cycle-spec>");
        }
        std::size_t position = 0;
        const auto [ptr, ec] =
            std::from_chars(rest.data(), rest.data() + colon, position);
        if (ec != std::errc() || ptr != rest.data() + colon) {
            throw Error("bad position in '" + std::string(name) + "'");
        }
        const std::string_view cycles = rest.substr(colon + 1);
        return position_letter_perm(domain, position,
                                    parse_letter_cycles(domain.alphabet(), cycles),
                                    std::string(name));
    }
    throw Error("unknown symmetry '" + std::string(name) +
                "' (known: identity, reversal, yz-swap, pos-perm:<position>:<cycle-spec>)");
}

} // namespace symlab
