#pragma once

#include "gw/gapped.hpp"
#include "gw/word.hpp"

#include <span>
#include <vector>

namespace gw {

/// All runs of w, sorted. Divide-and-conquer over extension functions,
/// O(n log n) time; agrees with oracle_runs.
std::vector<Run> compute_runs(const Word& w);

/// All maximal ordinary palindromes, both parities, in O(n).
/// Agrees with oracle_maximal_ordinary_palindromes.
std::vector<Segment> manacher(const Word& w);

/// Per-period scan: for each period q the maximal intervals of positions j
/// with w[j] = w[j+q] are exactly the maximal gapped repeats of period q.
/// Keeps those with q <= alpha*u. O(n^2), canonical order.
std::vector<GappedRepeat> repeats_by_period(const Word& w, const Rat& alpha);

/// Per-antidiagonal scan: on the antidiagonal sigma = end(L)+beg(R) the
/// maximal matching intervals of positions i with w[i] = w[sigma-i] are
/// exactly the maximal gapped palindromes; intervals reaching the center
/// collapse to the maximal ordinary palindrome of that center.
/// Keeps those with q <= alpha*u. O(n^2), canonical order.
std::vector<GappedPalindrome> palindromes_by_diagonal(const Word& w, const Rat& alpha);

/// Maximal gapped repeats with overlapping arms (end(L) >= beg(R)), read
/// off the run borders: run (b,e,p) of length L contributes one repeat
/// ([b..e-q],[b+q..e]) per period q = k*p with 2q <= L-1. O(sum of
/// exponents) given the runs; every output is alpha-gapped for any
/// alpha >= 1 since q < u.
std::vector<GappedRepeat> overlap_repeats_from_runs(const Word& w, std::span<const Run> runs);

/// Union of the run-border overlap repeats and the non-overlap subset of
/// the per-period scan; equals repeats_by_period(w, alpha) as a set.
std::vector<GappedRepeat> enumerate_all_repeats(const Word& w, const Rat& alpha);

/// An alpha that no maximal repeat or palindrome of w can violate.
inline Rat unbounded_alpha(const Word& w) { return Rat(w.length() + 2); }

} // namespace gw
