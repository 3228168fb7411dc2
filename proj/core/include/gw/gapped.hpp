#pragma once

#include "gw/rational.hpp"
#include "gw/word.hpp"

namespace gw {

/// Pair of equal-length arm segments with beg(left) < beg(right).
/// The arms may overlap; the gap is negative in that case.
struct GappedRepeat {
    Segment left;
    Segment right;

    Pos arm_len() const { return left.length(); }
    Pos period() const { return right.beg - left.beg; }
    Pos gap() const { return right.beg - left.end - 1; }

    friend bool operator==(const GappedRepeat&, const GappedRepeat&) = default;
};

/// Pair of arm segments where the right arm reads as the reverse of the
/// left arm; left == right encodes an ordinary palindrome.
struct GappedPalindrome {
    Segment left;
    Segment right;

    Pos arm_len() const { return left.length(); }
    Pos period() const { return right.beg - left.beg; }
    Pos gap() const { return right.beg - left.end - 1; }
    bool ordinary() const { return left == right; }

    friend bool operator==(const GappedPalindrome&, const GappedPalindrome&) = default;
};

/// Maximal repetition: w[beg..end] has smallest period p and exponent
/// length/p >= 2; no one-position extension preserves period p.
struct Run {
    Pos beg = 0;
    Pos end = 0;
    Pos period = 0;

    Pos length() const { return end - beg + 1; }
    Rat exponent() const { return Rat(length(), period); }

    friend auto operator<=>(const Run&, const Run&) = default;
};

/// Analysis parameters. alpha >= 1, beta in (0,1), gamma in (0,1].
struct Params {
    Rat alpha{1};
    Rat beta{1, 2};
    Rat gamma{1};

    void validate() const;
};

/// Canonical output order: (beg(left), beg(right), arm length).
inline bool operator<(const GappedRepeat& a, const GappedRepeat& b) {
    if (a.left.beg != b.left.beg) return a.left.beg < b.left.beg;
    if (a.right.beg != b.right.beg) return a.right.beg < b.right.beg;
    return a.arm_len() < b.arm_len();
}

inline bool operator<(const GappedPalindrome& a, const GappedPalindrome& b) {
    if (a.left.beg != b.left.beg) return a.left.beg < b.left.beg;
    if (a.right.beg != b.right.beg) return a.right.beg < b.right.beg;
    return a.arm_len() < b.arm_len();
}

/// q <= alpha * u, exactly.
inline bool is_alpha_gapped(Pos period, Pos arm_len, const Rat& alpha) {
    return static_cast<__int128>(period) * alpha.den <=
           static_cast<__int128>(alpha.num) * arm_len;
}

} // namespace gw
