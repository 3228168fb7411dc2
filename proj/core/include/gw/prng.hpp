#pragma once

#include "gw/word.hpp"

#include <cstdint>

namespace gw {

/// splitmix64. Used for every random word in the project so that seeds
/// reproduce bit-identically across platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-enough value in [0, bound); bound must be nonzero. The
    /// modulo bias is irrelevant for test-word generation and keeping the
    /// mapping trivial is part of the reproducibility contract.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

inline Word random_word(Pos n, std::uint32_t sigma, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Symbol> sym;
    sym.reserve(static_cast<size_t>(n));
    for (Pos i = 0; i < n; ++i)
        sym.push_back(static_cast<Symbol>(rng.below(sigma == 0 ? 1 : sigma)));
    return Word(std::move(sym));
}

} // namespace gw
