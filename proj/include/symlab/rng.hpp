// rng.hpp -- seed derivation and portable deterministic sampling
//
// std::mt19937_64's raw output sequence is fully specified by the standard,
// but the std:: distributions are not. Everything here samples from raw
// engine output only, so a seed reproduces bit-identical results on any
// conforming implementation.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace symlab {

/// SplitMix64 finalizer. Used both as a standalone mixer for seed derivation
/// and to decorrelate user-supplied seeds before feeding mt19937_64.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives a child seed from a parent seed and an ordered list of tags
/// (grid-cell index, repetition, stream id, ...). Chaining the finalizer
/// keeps distinct tag tuples on distinct streams.
template <typename... Tags>
constexpr std::uint64_t derive_seed(std::uint64_t parent, Tags... tags) {
    std::uint64_t h = splitmix64(parent);
    ((h = splitmix64(h ^ static_cast<std::uint64_t>(tags))), ...);
    return h;
}

/// Deterministic generator: mt19937_64 under the hood, hand-rolled
/// conversions on top.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        // largest multiple of bound that fits in 64 bits
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x > limit);
        return x % bound;
    }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double real01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * real01(); }

    bool coin() { return (engine_() >> 63) != 0; }

    /// First `take` entries of a uniform random permutation of `items`
    /// (partial Fisher-Yates; items is consumed).
    template <typename T>
    std::vector<T> sample_without_replacement(std::vector<T> items, std::size_t take) {
        if (take > items.size()) take = items.size();
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(items.size() - i));
            std::swap(items[i], items[j]);
        }
        items.resize(take);
        return items;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace symlab
