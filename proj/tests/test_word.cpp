#include "doctest.h"
#include "test_util.hpp"

#include "gw/prng.hpp"
#include "gw/word.hpp"

#include <numeric>
#include <set>

using namespace gw;
using gwtest::W;

namespace {

// Exhaustive reference: least p such that f[i] = f[i+p] for all valid i.
Pos naive_smallest_period(std::span<const Symbol> f) {
    const Pos n = static_cast<Pos>(f.size());
    for (Pos p = 1; p < n; ++p) {
        bool ok = true;
        for (Pos i = 0; i + p < n; ++i)
            if (f[static_cast<size_t>(i)] != f[static_cast<size_t>(i + p)]) { ok = false; break; }
        if (ok) return p;
    }
    return n;
}

bool has_period(std::span<const Symbol> f, Pos p) {
    for (Pos i = 0; i + p < static_cast<Pos>(f.size()); ++i)
        if (f[static_cast<size_t>(i)] != f[static_cast<size_t>(i + p)]) return false;
    return true;
}

} // namespace

TEST_CASE("factor reads 1-based segments") {
    CHECK(factor(W("aaa"), {1, 2}) == std::vector<Symbol>{'a', 'a'});
    CHECK(factor(W("abaab"), {3, 4}) == std::vector<Symbol>{'a', 'a'});
    CHECK(factor(W("ab"), {2, 2}) == std::vector<Symbol>{'b'});
    CHECK_THROWS_AS(factor(W("ab"), {2, 3}), std::out_of_range);
    CHECK_THROWS_AS(factor(W("ab"), {0, 1}), std::out_of_range);
    CHECK_THROWS_AS(factor(W("ab"), {2, 1}), std::out_of_range);
}

TEST_CASE("smallest_period on the worked examples") {
    auto sp = [](const std::string& s) { return smallest_period(W(s).symbols()); };
    CHECK(sp("abab") == 2);
    CHECK(sp("aaa") == 1);
    CHECK(sp("abaab") == 3);
    CHECK(sp("a") == 1);
    CHECK(sp("ab") == 2);
    CHECK_THROWS_AS(smallest_period(std::span<const Symbol>{}), std::invalid_argument);
}

TEST_CASE("is_periodic threshold at half the length") {
    CHECK(is_periodic(W("aa").symbols()));
    CHECK_FALSE(is_periodic(W("ab").symbols()));
    CHECK_FALSE(is_periodic(W("abaab").symbols()));
    CHECK(is_periodic(W("abab").symbols()));
    CHECK_FALSE(is_periodic(W("aba").symbols()));
}

TEST_CASE("smallest_period agrees with the exhaustive scan") {
    gwtest::each_word_up_to(10, 2, [](const Word& w) {
        CHECK(smallest_period(w.symbols()) == naive_smallest_period(w.symbols()));
    });
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Word w = random_word(1 + static_cast<Pos>(seed % 32), 3, seed);
        CHECK(smallest_period(w.symbols()) == naive_smallest_period(w.symbols()));
    }
}

TEST_CASE("Fine and Wilf: gcd of two short-enough periods is a period") {
    gwtest::each_word_up_to(9, 2, [](const Word& w) {
        const Pos n = w.length();
        for (Pos b = 1; b <= n; ++b) {
            for (Pos e = b; e <= n; ++e) {
                auto f = w.symbols().subspan(static_cast<size_t>(b - 1),
                                             static_cast<size_t>(e - b + 1));
                const Pos len = e - b + 1;
                for (Pos p = 1; p <= len; ++p) {
                    if (!has_period(f, p)) continue;
                    for (Pos q = 1; q <= len; ++q) {
                        if (p + q > len || !has_period(f, q)) continue;
                        CHECK(has_period(f, std::gcd(p, q)));
                    }
                }
            }
        }
    });
}

TEST_CASE("occurrences of a periodic factor are spaced by its period") {
    gwtest::each_word_up_to(10, 2, [](const Word& w) {
        const Pos n = w.length();
        for (Pos b = 1; b <= n; ++b) {
            for (Pos e = b + 1; e <= n; ++e) {
                auto u = factor(w, {b, e});
                if (!is_periodic(u)) continue;
                const Pos p = smallest_period(u);
                std::vector<Pos> occ;
                const Pos len = e - b + 1;
                for (Pos s = 1; s + len - 1 <= n; ++s) {
                    bool eq = true;
                    for (Pos i = 0; i < len; ++i)
                        if (w[s + i] != u[static_cast<size_t>(i)]) { eq = false; break; }
                    if (eq) occ.push_back(s);
                }
                for (size_t i = 1; i < occ.size(); ++i)
                    CHECK(occ[i] - occ[i - 1] >= p);
            }
        }
    });
}

TEST_CASE("random words reproduce bit-identically per seed") {
    Word a = random_word(64, 4, 12345);
    Word b = random_word(64, 4, 12345);
    Word c = random_word(64, 4, 12346);
    CHECK(std::vector<Symbol>(a.symbols().begin(), a.symbols().end()) ==
          std::vector<Symbol>(b.symbols().begin(), b.symbols().end()));
    CHECK(std::vector<Symbol>(a.symbols().begin(), a.symbols().end()) !=
          std::vector<Symbol>(c.symbols().begin(), c.symbols().end()));
    for (Symbol s : a.symbols()) CHECK(s < 4);
}
