#pragma once

#include "gw/gapped.hpp"
#include "gw/word.hpp"

#include <vector>

namespace gw {

/// Brute-force enumerators that follow the definitions literally, used as
/// ground truth for the production scans. Costs are cubic-ish and intended
/// for words up to a few hundred symbols. They share nothing with the fast
/// code paths apart from the core types.

/// All maximal gapped repeats (overlap supported, no alpha filter),
/// in canonical order.
std::vector<GappedRepeat> oracle_maximal_gapped_repeats(const Word& w);

/// All maximal gapped palindromes including the maximal ordinary ones,
/// in canonical order.
std::vector<GappedPalindrome> oracle_maximal_gapped_palindromes(const Word& w);

/// All runs (maximal repetitions with exponent >= 2), sorted.
std::vector<Run> oracle_runs(const Word& w);

/// All maximal ordinary palindromes (both parities, never empty), sorted.
std::vector<Segment> oracle_maximal_ordinary_palindromes(const Word& w);

} // namespace gw
