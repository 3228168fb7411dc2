#include "doctest.h"
#include "test_util.hpp"

#include "gw/oracle.hpp"

#include <algorithm>

using namespace gw;
using gwtest::W;

namespace {

GappedRepeat rep(Pos a, Pos b, Pos c, Pos d) { return {{a, b}, {c, d}}; }
GappedPalindrome pal(Pos a, Pos b, Pos c, Pos d) { return {{a, b}, {c, d}}; }

} // namespace

TEST_CASE("maximal gapped repeats of the small words") {
    CHECK(oracle_maximal_gapped_repeats(W("aaa")) ==
          std::vector<GappedRepeat>{rep(1, 2, 2, 3), rep(1, 1, 3, 3)});
    CHECK(oracle_maximal_gapped_repeats(W("ab")).empty());
    CHECK(oracle_maximal_gapped_repeats(W("abab")) ==
          std::vector<GappedRepeat>{rep(1, 2, 3, 4)});
    CHECK(oracle_maximal_gapped_repeats(W("a")).empty());
}

TEST_CASE("maximal gapped palindromes of the small words") {
    CHECK(oracle_maximal_gapped_palindromes(W("ab")) ==
          std::vector<GappedPalindrome>{pal(1, 1, 1, 1), pal(2, 2, 2, 2)});

    auto abcdba = oracle_maximal_gapped_palindromes(W("abcdba"));
    CHECK(std::find(abcdba.begin(), abcdba.end(), pal(1, 2, 5, 6)) != abcdba.end());

    auto abccba = oracle_maximal_gapped_palindromes(W("abccba"));
    CHECK(std::find(abccba.begin(), abccba.end(), pal(1, 6, 1, 6)) != abccba.end());
    CHECK(std::find(abccba.begin(), abccba.end(), pal(1, 2, 5, 6)) == abccba.end());
}

TEST_CASE("non-ordinary maximal palindromes have gap at least two") {
    gwtest::each_word_up_to(10, 2, [](const Word& w) {
        for (const auto& g : oracle_maximal_gapped_palindromes(w)) {
            if (!g.ordinary()) CHECK(g.gap() >= 2);
        }
    });
}

TEST_CASE("runs of the small words") {
    CHECK(oracle_runs(W("aaa")) == std::vector<Run>{{1, 3, 1}});
    CHECK(oracle_runs(W("abaab")) == std::vector<Run>{{3, 4, 1}});
    CHECK(oracle_runs(W("ab")).empty());
}

TEST_CASE("maximal ordinary palindromes of the small words") {
    CHECK(oracle_maximal_ordinary_palindromes(W("aba")) ==
          std::vector<Segment>{{1, 1}, {1, 3}, {3, 3}});
    CHECK(oracle_maximal_ordinary_palindromes(W("aaa")) ==
          std::vector<Segment>{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 3}});
    CHECK(oracle_maximal_ordinary_palindromes(W("ab")) ==
          std::vector<Segment>{{1, 1}, {2, 2}});
}

TEST_CASE("oracle outputs satisfy the type invariants") {
    gwtest::each_word_up_to(9, 2, [](const Word& w) {
        for (const auto& r : oracle_maximal_gapped_repeats(w))
            CHECK(gwtest::valid_repeat(w, r));
        for (const auto& g : oracle_maximal_gapped_palindromes(w))
            CHECK(gwtest::valid_palindrome(w, g));
        for (const auto& run : oracle_runs(w)) {
            CHECK(run.period <= run.length() / 2);
            CHECK(smallest_period(w.symbols().subspan(
                      static_cast<size_t>(run.beg - 1),
                      static_cast<size_t>(run.length()))) == run.period);
        }
    });
}

TEST_CASE("ordinary palindromes are the ordinary subset of the gapped set") {
    gwtest::each_word_up_to(10, 2, [](const Word& w) {
        std::vector<Segment> ordinary;
        for (const auto& g : oracle_maximal_gapped_palindromes(w))
            if (g.ordinary()) ordinary.push_back(g.left);
        CHECK(ordinary == oracle_maximal_ordinary_palindromes(w));
    });
    gwtest::each_word_up_to(7, 3, [](const Word& w) {
        std::vector<Segment> ordinary;
        for (const auto& g : oracle_maximal_gapped_palindromes(w))
            if (g.ordinary()) ordinary.push_back(g.left);
        CHECK(ordinary == oracle_maximal_ordinary_palindromes(w));
    });
}

TEST_CASE("at most 2n-1 maximal ordinary palindromes") {
    gwtest::each_word_up_to(10, 2, [](const Word& w) {
        CHECK(static_cast<Pos>(oracle_maximal_ordinary_palindromes(w).size()) <=
              2 * w.length() - 1);
    });
}

TEST_CASE("overlap kept vs overlap filtered differ exactly on the aaa example") {
    auto all = oracle_maximal_gapped_repeats(W("aaa"));
    std::vector<GappedRepeat> no_overlap;
    for (const auto& r : all)
        if (r.gap() >= 0) no_overlap.push_back(r);
    CHECK(std::find(all.begin(), all.end(), rep(1, 2, 2, 3)) != all.end());
    CHECK(std::find(no_overlap.begin(), no_overlap.end(), rep(1, 2, 2, 3)) ==
          no_overlap.end());
}
