#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace gw {

using Symbol = std::uint32_t;
using Pos = long long;

/// Immutable word over an integer alphabet. Public positions are 1-based
/// throughout the library; storage is 0-based internally.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : sym_(std::move(symbols)) {}

    /// Decodes text as raw bytes (symbol values 0..255).
    static Word from_bytes(std::string_view text);

    Pos length() const { return static_cast<Pos>(sym_.size()); }

    /// 1-based access, i in [1..n].
    Symbol operator[](Pos i) const {
        assert(i >= 1 && i <= length());
        return sym_[static_cast<size_t>(i - 1)];
    }

    std::span<const Symbol> symbols() const { return sym_; }

private:
    std::vector<Symbol> sym_;
};

/// Non-empty inclusive position interval [beg..end], 1-based.
struct Segment {
    Pos beg = 0;
    Pos end = 0;

    Pos length() const { return end - beg + 1; }
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// Copy of w[s] as a value sequence. Throws std::out_of_range if s is not
/// inside w.
std::vector<Symbol> factor(const Word& w, Segment s);

/// Z-array: z[0] = |f|, z[i] = length of the longest common prefix of f and
/// f[i..]. Linear time.
template <class T>
std::vector<Pos> z_function(std::span<const T> f) {
    const Pos n = static_cast<Pos>(f.size());
    std::vector<Pos> z(static_cast<size_t>(n), 0);
    if (n == 0) return z;
    z[0] = n;
    for (Pos i = 1, l = 0, r = 0; i < n; ++i) {
        if (i < r) z[static_cast<size_t>(i)] = std::min(r - i, z[static_cast<size_t>(i - l)]);
        Pos& zi = z[static_cast<size_t>(i)];
        while (i + zi < n && f[static_cast<size_t>(zi)] == f[static_cast<size_t>(i + zi)]) ++zi;
        if (i + zi > r) { l = i; r = i + zi; }
    }
    return z;
}

/// Least p with 1 <= p <= |f| such that f[i] = f[i+p] for all valid i.
/// A proper period always satisfies p < |f|; by convention |f| itself is
/// returned when no proper period exists, which keeps the function total.
/// Throws std::invalid_argument on empty input.
Pos smallest_period(std::span<const Symbol> f);

/// True iff smallest_period(f) <= floor(|f|/2).
bool is_periodic(std::span<const Symbol> f);

} // namespace gw
