#pragma once

#include "gw/bigint.hpp"
#include "gw/gapped.hpp"
#include "gw/word.hpp"

#include <span>
#include <vector>

namespace gw {

/// Sum of run exponents length/p as an exact fraction; E(w) < 3n.
BigRat sum_of_exponents(std::span<const Run> runs);

/// Longest ell <= |s| such that the length-ell suffix of w[s] is periodic
/// (smallest period at most floor(ell/2)); 0 if none. Linear time.
Pos longest_periodic_suffix_len(const Word& w, Segment s);

/// Mirror image of the suffix variant.
Pos longest_periodic_prefix_len(const Word& w, Segment s);

struct PalindromeClasses {
    std::vector<GappedPalindrome> ordinary;
    std::vector<GappedPalindrome> periodic;  // non-ordinary, periodic suffix >= beta*u
    std::vector<GappedPalindrome> aperiodic; // the rest
};

struct RepeatClasses {
    std::vector<GappedRepeat> periodic; // periodic prefix >= beta*u
    std::vector<GappedRepeat> aperiodic;
};

/// Partition is exhaustive and disjoint; pals should be the alpha-gapped
/// maximal palindromes of w. Palindromes use the periodic *suffix* of the
/// left arm, repeats the periodic *prefix*.
PalindromeClasses classify_palindromes(std::span<const GappedPalindrome> pals,
                                       const Word& w, const Rat& beta);
RepeatClasses classify_repeats(std::span<const GappedRepeat> reps,
                               const Word& w, const Rat& beta);

/// Every quantitative bound evaluated on one word. Each pass flag is the
/// literal comparison of a count against its bound; comparisons against
/// rational bounds are exact, the pi^2 family is evaluated in double with
/// an absolute slack of 1e-6.
struct BoundReport {
    Pos n = 0;
    Rat alpha;
    Rat beta_repeats{2, 3};
    Rat beta_palindromes{6, 7};

    long long repeats_total = 0;
    long long repeats_periodic = 0;
    long long repeats_aperiodic = 0;
    long long palindromes_total = 0;
    long long palindromes_ordinary = 0;
    long long palindromes_periodic = 0;
    long long palindromes_aperiodic = 0;
    long long run_count = 0;
    BigRat exponent_sum;

    double repeats_total_bound = 0;        // 3(pi^2/6 + 5/2) alpha n
    double palindromes_total_bound = 0;    // 7(pi^2/6 + 1/2) alpha n - 5n - 1
    long long ordinary_bound = 0;          // 2n - 1
    double repeats_periodic_bound = 0;     // 2 alpha E(w)/beta   (display value)
    double palindromes_periodic_bound = 0; // 2 (alpha-1) E(w)/beta (display value)
    double palindromes_aperiodic_bound = 0;// alpha n (pi^2/6 - 1/2)/(1-beta)
    long long exponent_sum_bound = 0;      // 3n
    long long run_count_bound = 0;         // n

    long long phi_t_conflicts = 0; // phi_t image of beta-aperiodic palindromes
    long long phi_conflicts = 0;   // phi image of beta-aperiodic repeats

    bool pass_repeats_total = false;
    bool pass_palindromes_total = false;
    bool pass_ordinary = false;
    bool pass_repeats_periodic = false;
    bool pass_palindromes_periodic = false;
    bool pass_palindromes_aperiodic = false;
    bool pass_exponent_sum = false;
    bool pass_run_count = false;
    bool pass_phi_t_conflict_free = false;
    bool pass_phi_conflict_free = false;

    bool all_pass() const {
        return pass_repeats_total && pass_palindromes_total && pass_ordinary &&
               pass_repeats_periodic && pass_palindromes_periodic &&
               pass_palindromes_aperiodic && pass_exponent_sum && pass_run_count &&
               pass_phi_t_conflict_free && pass_phi_conflict_free;
    }
};

/// Enumerates, classifies and evaluates all bounds at the given alpha.
/// Throws std::invalid_argument unless alpha > 1 and n >= 2.
BoundReport verify_bounds(const Word& w, const Rat& alpha,
                          const Rat& beta_repeats = Rat(2, 3),
                          const Rat& beta_palindromes = Rat(6, 7));

} // namespace gw
