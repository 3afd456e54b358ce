// symmetry.hpp -- bijections on the word universe
//
// A symmetry is stored as an explicit permutation table over the enumerated
// domain. At desk scale (26^2 = 676 words) that makes application a table
// lookup and bijectivity / composition exact and cheap. Non-bijective word
// maps are representable too, so verify_bijection() has something to reject.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symlab/word.hpp"

namespace symlab {

class Symmetry {
public:
    /// Tabulates `forward` over the whole domain. Throws DomainError if any
    /// image falls outside the domain (closure violation).
    static Symmetry from_function(const WordDomain& domain, std::string name,
                                  const std::function<Word(const Word&)>& forward);

    /// Wraps an explicit rank table; table[rank(w)] = rank(forward(w)).
    static Symmetry from_table(WordDomain domain, std::string name,
                               std::vector<std::uint32_t> table);

    const WordDomain& domain() const { return domain_; }
    const std::string& name() const { return name_; }

    Word apply(const Word& w) const;

    /// Inverse application; throws Error when the map is not a bijection.
    Word apply_inverse(const Word& w) const;

    /// True iff the table is a permutation of the enumerated domain.
    bool is_bijection() const;

    /// Rank-level access for bulk operations.
    std::uint32_t image_rank(std::size_t rank) const { return table_[rank]; }

private:
    Symmetry(WordDomain domain, std::string name, std::vector<std::uint32_t> table);

    WordDomain domain_;
    std::string name_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_; // empty when not a bijection
};

/// Exhaustive bijectivity check over the enumerated domain.
bool verify_bijection(const Symmetry& sigma);

/// forward = a.forward after b.forward (apply b first). Same domain required.
Symmetry compose(const Symmetry& a, const Symmetry& b);

// --- builtin symmetries ---

Symmetry identity_symmetry(const WordDomain& domain);

/// Reverses letter order: sigma(XY) = YX.
Symmetry reversal_symmetry(const WordDomain& domain);

/// Swaps Y and Z in the second position, fixing all other words. Requires a
/// domain of length >= 2 whose alphabet contains Y and Z.
Symmetry yz_swap_symmetry(const WordDomain& domain);

/// Applies a permutation of the alphabet at one position, fixing the rest.
/// `letter_perm[i]` is the image of letter index i.
Symmetry position_letter_perm(const WordDomain& domain, std::size_t position,
                              const std::vector<std::size_t>& letter_perm,
                              std::string name = "");

/// Parses a cycle spec like "(YZ)" or "(AB)(CDE)" into a letter permutation
/// of the given alphabet. Each letter may appear at most once.
std::vector<std::size_t> parse_letter_cycles(const Alphabet& alphabet,
                                             std::string_view cycles);

/// Resolves a CLI symmetry name: identity | reversal | yz-swap |
/// pos-perm:<position>:<cycle-spec> (position is 0-based).
Symmetry symmetry_by_name(const WordDomain& domain, std::string_view name);

} // namespace symlab
