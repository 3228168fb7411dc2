#include "gw/oracle.hpp"

#include <algorithm>

namespace gw {

std::vector<GappedRepeat> oracle_maximal_gapped_repeats(const Word& w) {
    const Pos n = w.length();
    std::vector<GappedRepeat> out;
    for (Pos bL = 1; bL <= n; ++bL) {
        for (Pos bR = bL + 1; bR <= n; ++bR) {
            const bool left_max = (bL == 1) || w[bL - 1] != w[bR - 1];
            bool equal = true;
            for (Pos u = 1; bR + u - 1 <= n && equal; ++u) {
                equal = w[bL + u - 1] == w[bR + u - 1];
                if (!equal) break;
                const Pos eR = bR + u - 1;
                const bool right_max = (eR == n) || w[bL + u] != w[bR + u];
                if (left_max && right_max)
                    out.push_back({{bL, bL + u - 1}, {bR, eR}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GappedPalindrome> oracle_maximal_gapped_palindromes(const Word& w) {
    const Pos n = w.length();
    std::vector<GappedPalindrome> out;
    for (Pos bL = 1; bL <= n; ++bL) {
        for (Pos bR = bL; bR <= n; ++bR) {
            for (Pos u = 1; bR + u - 1 <= n; ++u) {
                const Pos eL = bL + u - 1, eR = bR + u - 1;
                bool match = true;
                for (Pos i = 0; i < u; ++i) {
                    if (w[bL + i] != w[eR - i]) { match = false; break; }
                }
                if (!match) continue;
                // Outward extension pairs position bL-1 with eR+1; inward
                // extension pairs eL+1 with bR-1. A comparison whose
                // positions leave the word cannot block maximality.
                const bool outward =
                    (bL == 1) || (eR == n) || w[bL - 1] != w[eR + 1];
                const bool inward =
                    (eL + 1 > n) || (bR - 1 < 1) || w[eL + 1] != w[bR - 1];
                if (outward && inward)
                    out.push_back({{bL, eL}, {bR, eR}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Run> oracle_runs(const Word& w) {
    const Pos n = w.length();
    auto sym = w.symbols();
    std::vector<Run> out;
    for (Pos b = 1; b <= n; ++b) {
        for (Pos e = b + 1; e <= n; ++e) {
            const Pos len = e - b + 1;
            const Pos p = smallest_period(sym.subspan(static_cast<size_t>(b - 1),
                                                      static_cast<size_t>(len)));
            if (len < 2 * p) continue;
            const bool left_break = (b == 1) || w[b - 1] != w[b - 1 + p];
            const bool right_break = (e == n) || w[e + 1] != w[e + 1 - p];
            if (left_break && right_break) out.push_back({b, e, p});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Segment> oracle_maximal_ordinary_palindromes(const Word& w) {
    const Pos n = w.length();
    std::vector<Segment> out;
    for (Pos c = 1; c <= n; ++c) {
        Pos r = 0;
        while (c - r - 1 >= 1 && c + r + 1 <= n && w[c - r - 1] == w[c + r + 1]) ++r;
        out.push_back({c - r, c + r});
    }
    for (Pos c = 1; c + 1 <= n; ++c) {
        Pos r = 0;
        while (c - r >= 1 && c + 1 + r <= n && w[c - r] == w[c + 1 + r]) ++r;
        if (r >= 1) out.push_back({c - r + 1, c + r});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gw
