#pragma once

#include "gw/gapped.hpp"
#include "gw/rational.hpp"
#include "gw/word.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gw {

struct Point {
    long long x = 0;
    long long y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

/// Membership in the region { (x,y) : 1 <= y <= n-1, 1 <= x <= n-y }.
bool in_region(Point p, Pos n);

/// Maps a maximal gapped repeat to (end of left arm, period).
Point phi(const GappedRepeat& r);

/// Inverse direction of phi: reconstructs the unique maximal repeat with
/// left arm ending at p.x and period p.y, or nothing if no maximal repeat
/// maps there. Witnesses injectivity of phi.
std::optional<GappedRepeat> restore_repeat_from_point(const Word& w, Point p);

/// Maps a maximal non-ordinary gapped palindrome to (m, d): m is the
/// position nearest the left arm midpoint (ties right), m+d nearest the
/// right arm midpoint (ties left). w[m] = w[m+d] always holds.
Point phi_t(const GappedPalindrome& g);

/// Expands the maximal inward/outward matches around positions m and m+d.
/// Returns the maximal palindrome found there (the ordinary one when the
/// matches cross the center), or nothing when w[m] != w[m+d] or the point
/// lies outside the word. Identity with phi_t on its image.
std::optional<GappedPalindrome> restore_palindrome_from_point(const Word& w, Point p);

/// hat gamma-covers p iff hat.x - gamma*hat.y <= p.x <= hat.x and
/// hat.y*(1-gamma) <= p.y <= hat.y. Exact rational arithmetic.
bool gamma_covers(Point hat, Point p, const Rat& gamma);

/// All unordered pairs of distinct points whose covered rectangles share an
/// integer point; empty iff no two points gamma-cover a common point.
/// Rectangle intersection on integer ranges, O(k^2) pairs.
std::vector<std::pair<Point, Point>> cover_conflicts(std::span<const Point> points,
                                                     const Rat& gamma);

struct IntervalCountResult {
    long long count = 0;
    bool plus_one_branch = false; // took floor(1/gamma)+1
};

/// |[psi - 1/gamma, psi) intersect Z|, computed both by direct counting and
/// by the case formula (floor(1/gamma)+1 iff 0 < psi - floor(psi) <= delta
/// with delta = 1/gamma - floor(1/gamma), else floor(1/gamma)). Throws
/// std::logic_error if the two disagree.
IntervalCountResult interval_int_count(const Rat& psi, const Rat& gamma);

/// Checks sum_{i=1..ceil(n*gamma)} f(i)*g(i) <= sum f(i)/gamma for
/// f(i) = n/i^2 and g(i) = |{y >= 1 : (i-1)/gamma <= y < i/gamma}|,
/// evaluated in exact arithmetic over a common denominator.
bool check_nonincreasing_inequality(long long n, const Rat& gamma);

struct PointBoundValues {
    double general = 0;   // n*pi^2 / (6*gamma)
    double refined = 0;   // n*(pi^2/6 - 1/2) / gamma
    double gamma_one = 0; // n*pi^2/6 - 3n/4, the gamma = 1 special case
};

/// The three numeric point-set bounds at (n, gamma). Requires n >= 2.
PointBoundValues point_bounds(long long n, const Rat& gamma);

} // namespace gw
