#include "gw/enumerate.hpp"

#include <algorithm>
#include <cstdint>

namespace gw {

namespace {

// ---------------------------------------------------------------------------
// Runs via divide and conquer.
//
// A maximal repetition crossing the split point of a node is anchored at one
// of two position pairs straddling the split: (m, m+p) when its match
// interval reaches m, or (m+1-p, m+1) otherwise. Around each anchor the
// maximal backward/forward pair-match lengths are read from four Z-arrays in
// O(1) per period, so a node of length L costs O(L) and the whole recursion
// O(n log n). Candidates truncated by node borders are recognized by a
// constant-time extendability test against the full word and dropped; the
// untruncated copy is found at the ancestor node it crosses.
// ---------------------------------------------------------------------------

using Scratch = std::vector<std::uint64_t>;
constexpr std::uint64_t kSep = 1ull << 40; // above any 32-bit symbol

struct RunCandidate {
    Pos b, e, p; // 0-based inclusive extent
    friend auto operator<=>(const RunCandidate&, const RunCandidate&) = default;
};

struct RunsCollector {
    std::span<const Symbol> s;
    std::vector<RunCandidate> candidates;
    Scratch ru, v, w2, w3;

    // True if [b..e] with period p extends by one position in the full word.
    bool extendable(Pos b, Pos e, Pos p) const {
        const Pos n = static_cast<Pos>(s.size());
        if (b - 1 >= 0 && s[static_cast<size_t>(b - 1)] == s[static_cast<size_t>(b - 1 + p)])
            return true;
        if (e + 1 < n && s[static_cast<size_t>(e + 1)] == s[static_cast<size_t>(e + 1 - p)])
            return true;
        return false;
    }

    void emit(Pos b, Pos e, Pos p) {
        if (!extendable(b, e, p)) candidates.push_back({b, e, p});
    }

    void node(Pos l, Pos r) {
        if (r - l + 1 < 2) return;
        const Pos m = (l + r) / 2;
        const Pos nu = m - l + 1, nv = r - m;

        ru.clear();
        for (Pos i = m; i >= l; --i) ru.push_back(s[static_cast<size_t>(i)]);
        v.clear();
        for (Pos i = m + 1; i <= r; ++i) v.push_back(s[static_cast<size_t>(i)]);

        w2.clear(); // v # s[l..r]   (forward matches of v inside the node)
        w2.insert(w2.end(), v.begin(), v.end());
        w2.push_back(kSep);
        for (Pos i = l; i <= r; ++i) w2.push_back(s[static_cast<size_t>(i)]);

        w3.clear(); // ru # reverse(s[l..r])
        w3.insert(w3.end(), ru.begin(), ru.end());
        w3.push_back(kSep);
        for (Pos i = r; i >= l; --i) w3.push_back(s[static_cast<size_t>(i)]);

        auto z_ru = z_function(std::span<const std::uint64_t>(ru));
        auto z_v = z_function(std::span<const std::uint64_t>(v));
        auto z_w2 = z_function(std::span<const std::uint64_t>(w2));
        auto z_w3 = z_function(std::span<const std::uint64_t>(w3));

        // Case A: anchor pair (m, m+p); match interval contains m.
        for (Pos p = 1; p <= nv; ++p) {
            const Pos lam = z_w3[static_cast<size_t>(nu + 1 + (r - m - p))];
            if (lam < 1) continue;
            const Pos rho = p < nv ? z_v[static_cast<size_t>(p)] : 0;
            if (lam + rho >= p) emit(m - lam + 1, m + p + rho, p);
        }

        // Case B: anchor pair (m+1-p, m+1); match interval stays left of m.
        for (Pos p = 1; p <= nu; ++p) {
            const Pos rho =
                std::min<Pos>(z_w2[static_cast<size_t>(nv + 1 + (m + 1 - p - l))], nv);
            if (rho < 1) continue;
            const Pos lam = p < nu ? z_ru[static_cast<size_t>(p)] : 0;
            if (lam + rho >= p) emit(m - p - lam + 1, m + rho, p);
        }

        node(l, m);
        node(m + 1, r);
    }
};

// True iff w[i] matches w[sigma-i] on the antidiagonal (positions pairing
// to the same spot always match).
inline bool diag_match(const Word& w, Pos sigma, Pos i) {
    return 2 * i == sigma || w[i] == w[sigma - i];
}

} // namespace

std::vector<Run> compute_runs(const Word& w) {
    std::vector<Run> out;
    const Pos n = w.length();
    if (n < 2) return out;
    RunsCollector rc{w.symbols(), {}, {}, {}, {}, {}};
    rc.node(0, n - 1);
    auto& cand = rc.candidates;
    std::sort(cand.begin(), cand.end());
    for (size_t i = 0; i < cand.size(); ++i) {
        if (i > 0 && cand[i].b == cand[i - 1].b && cand[i].e == cand[i - 1].e)
            continue; // keep the smallest period per extent
        out.push_back({cand[i].b + 1, cand[i].e + 1, cand[i].p});
    }
    return out;
}

std::vector<Segment> manacher(const Word& w) {
    const Pos n = w.length();
    std::vector<Segment> out;
    if (n == 0) return out;

    // Odd lengths: k = palindrome radius including the center.
    {
        std::vector<Pos> d(static_cast<size_t>(n));
        for (Pos i = 0, l = 0, r = -1; i < n; ++i) {
            Pos k = i > r ? 1 : std::min(d[static_cast<size_t>(l + r - i)], r - i + 1);
            while (i + k < n && i - k >= 0 &&
                   w[i + k + 1] == w[i - k + 1]) ++k;
            d[static_cast<size_t>(i)] = k;
            if (i + k - 1 > r) { l = i - k + 1; r = i + k - 1; }
            out.push_back({i - k + 2, i + k});
        }
    }
    // Even lengths: k = number of matched pairs around the gap (i-1, i).
    {
        std::vector<Pos> d(static_cast<size_t>(n));
        for (Pos i = 0, l = 0, r = -1; i < n; ++i) {
            Pos k = i > r ? 0 : std::min(d[static_cast<size_t>(l + r - i + 1)], r - i + 1);
            while (i + k < n && i - k - 1 >= 0 &&
                   w[i + k + 1] == w[i - k]) ++k;
            d[static_cast<size_t>(i)] = k;
            if (i + k - 1 > r) { l = i - k; r = i + k - 1; }
            if (k >= 1) out.push_back({i - k + 1, i + k});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GappedRepeat> repeats_by_period(const Word& w, const Rat& alpha) {
    const Pos n = w.length();
    std::vector<GappedRepeat> out;
    for (Pos q = 1; q <= n - 1; ++q) {
        Pos j = 1;
        while (j <= n - q) {
            if (w[j] != w[j + q]) { ++j; continue; }
            const Pos s = j;
            while (j <= n - q && w[j] == w[j + q]) ++j;
            const Pos e = j - 1;
            if (is_alpha_gapped(q, e - s + 1, alpha))
                out.push_back({{s, e}, {s + q, e + q}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GappedPalindrome> palindromes_by_diagonal(const Word& w, const Rat& alpha) {
    const Pos n = w.length();
    std::vector<GappedPalindrome> out;
    for (Pos sigma = 2; sigma <= 2 * n; ++sigma) {
        const Pos lo = std::max<Pos>(1, sigma - n);
        const Pos mid = sigma / 2;
        Pos i = lo;
        while (i <= mid) {
            if (!diag_match(w, sigma, i)) { ++i; continue; }
            const Pos s = i;
            while (i <= mid && diag_match(w, sigma, i)) ++i;
            const Pos e = i - 1;
            if (e == mid) {
                // Crosses the center: maximal ordinary palindrome [s..sigma-s].
                out.push_back({{s, sigma - s}, {s, sigma - s}});
            } else {
                const Pos u = e - s + 1;
                const Pos q = sigma - e - s;
                if (is_alpha_gapped(q, u, alpha))
                    out.push_back({{s, e}, {sigma - e, sigma - s}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GappedRepeat> overlap_repeats_from_runs(const Word& w, std::span<const Run> runs) {
    (void)w;
    std::vector<GappedRepeat> out;
    for (const Run& run : runs) {
        const Pos len = run.length();
        for (Pos q = run.period; 2 * q <= len - 1; q += run.period)
            out.push_back({{run.beg, run.end - q}, {run.beg + q, run.end}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GappedRepeat> enumerate_all_repeats(const Word& w, const Rat& alpha) {
    auto runs = compute_runs(w);
    auto out = overlap_repeats_from_runs(w, runs);
    for (auto& rep : repeats_by_period(w, alpha))
        if (rep.gap() >= 0) out.push_back(rep);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gw
