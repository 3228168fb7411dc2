#pragma once

#include "gw/gapped.hpp"
#include "gw/word.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gwtest {

inline gw::Word W(const std::string& text) { return gw::Word::from_bytes(text); }

/// All words of the given length over symbols {0..sigma-1}, fed one by one.
inline void each_word(gw::Pos length, gw::Symbol sigma,
                      const std::function<void(const gw::Word&)>& fn) {
    std::vector<gw::Symbol> sym(static_cast<size_t>(length), 0);
    for (;;) {
        fn(gw::Word(sym));
        size_t i = 0;
        while (i < sym.size() && sym[i] == sigma - 1) sym[i++] = 0;
        if (i == sym.size()) return;
        ++sym[i];
    }
}

inline void each_word_up_to(gw::Pos max_len, gw::Symbol sigma,
                            const std::function<void(const gw::Word&)>& fn) {
    for (gw::Pos len = 1; len <= max_len; ++len) each_word(len, sigma, fn);
}

/// Structural invariants of a gapped repeat against its word.
inline bool valid_repeat(const gw::Word& w, const gw::GappedRepeat& r) {
    const gw::Pos n = w.length();
    if (r.left.beg < 1 || r.left.beg > r.left.end || r.right.end > n) return false;
    if (r.left.length() != r.right.length()) return false;
    if (r.left.beg + 1 > r.right.beg) return false;
    for (gw::Pos i = 0; i < r.arm_len(); ++i)
        if (w[r.left.beg + i] != w[r.right.beg + i]) return false;
    return true;
}

inline bool valid_palindrome(const gw::Word& w, const gw::GappedPalindrome& g) {
    const gw::Pos n = w.length();
    if (g.left.beg < 1 || g.left.beg > g.left.end || g.right.end > n) return false;
    if (g.left.length() != g.right.length()) return false;
    if (g.left.beg > g.right.beg) return false;
    for (gw::Pos i = 0; i < g.arm_len(); ++i)
        if (w[g.left.beg + i] != w[g.right.end - i]) return false;
    return true;
}

} // namespace gwtest
