#include "gw/covermap.hpp"

#include "gw/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace gw {

namespace {

using i128 = __int128;

long long floor_div(i128 a, i128 b) {
    assert(b > 0);
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return static_cast<long long>(q);
}

long long ceil_div(i128 a, i128 b) {
    assert(b > 0);
    i128 q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return static_cast<long long>(q);
}

struct IntRect { // closed integer box [xlo..xhi] x [ylo..yhi]
    long long xlo, xhi, ylo, yhi;
};

// Integer points gamma-covered by hat: x in [ceil(hat.x - g*hat.y), hat.x],
// y in [ceil(hat.y*(1-g)), hat.y].
IntRect covered_box(Point hat, const Rat& gamma) {
    const long long a = gamma.num, b = gamma.den;
    IntRect rect{};
    rect.xhi = hat.x;
    rect.yhi = hat.y;
    rect.xlo = hat.x - floor_div(i128(a) * hat.y, b);
    rect.ylo = ceil_div(i128(hat.y) * (b - a), b);
    return rect;
}

} // namespace

bool in_region(Point p, Pos n) {
    return p.y >= 1 && p.y <= n - 1 && p.x >= 1 && p.x <= n - p.y;
}

Point phi(const GappedRepeat& r) {
    return Point{r.left.end, r.period()};
}

std::optional<GappedRepeat> restore_repeat_from_point(const Word& w, Point p) {
    const Pos n = w.length();
    const Pos x = p.x, q = p.y;
    if (q < 1 || x < 1 || x + q > n) return std::nullopt;
    if (w[x] != w[x + q]) return std::nullopt;
    // Not right-maximal at x: the arms extend to the right.
    if (x + q < n && w[x + 1] == w[x + 1 + q]) return std::nullopt;
    Pos j = x;
    while (j - 1 >= 1 && w[j - 1] == w[j - 1 + q]) --j;
    return GappedRepeat{{j, x}, {j + q, x + q}};
}

Point phi_t(const GappedPalindrome& g) {
    const Pos m = (g.left.beg + g.left.end + 1) / 2;         // ceil, ties right
    const Pos md = (g.right.beg + g.right.end) / 2;          // floor, ties left
    return Point{m, md - m};
}

std::optional<GappedPalindrome> restore_palindrome_from_point(const Word& w, Point p) {
    const Pos n = w.length();
    const Pos m = p.x, d = p.y;
    if (m < 1 || d < 1 || m + d > n) return std::nullopt;
    if (w[m] != w[m + d]) return std::nullopt;
    const Pos sigma = 2 * m + d;
    const Pos lo = std::max<Pos>(1, sigma - n);
    const Pos mid = sigma / 2;
    auto match = [&](Pos i) { return 2 * i == sigma || w[i] == w[sigma - i]; };
    Pos s = m, e = m;
    while (s - 1 >= lo && match(s - 1)) --s;
    while (e + 1 <= mid && match(e + 1)) ++e;
    if (e == mid) // crossed the center: the ordinary palindrome wins
        return GappedPalindrome{{s, sigma - s}, {s, sigma - s}};
    return GappedPalindrome{{s, e}, {sigma - e, sigma - s}};
}

bool gamma_covers(Point hat, Point p, const Rat& gamma) {
    const long long a = gamma.num, b = gamma.den;
    if (p.x > hat.x || p.y > hat.y) return false;
    // hat.x - gamma*hat.y <= p.x
    if (i128(hat.x) * b - i128(a) * hat.y > i128(p.x) * b) return false;
    // hat.y*(1-gamma) <= p.y
    if (i128(hat.y) * (b - a) > i128(p.y) * b) return false;
    return true;
}

std::vector<std::pair<Point, Point>> cover_conflicts(std::span<const Point> points,
                                                     const Rat& gamma) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<IntRect> boxes;
    boxes.reserve(pts.size());
    for (const Point& pt : pts) boxes.push_back(covered_box(pt, gamma));

    std::vector<std::pair<Point, Point>> out;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            const IntRect &a = boxes[i], &b = boxes[j];
            if (std::max(a.xlo, b.xlo) <= std::min(a.xhi, b.xhi) &&
                std::max(a.ylo, b.ylo) <= std::min(a.yhi, b.yhi))
                out.emplace_back(pts[i], pts[j]);
        }
    }
    return out;
}

IntervalCountResult interval_int_count(const Rat& psi, const Rat& gamma) {
    if (gamma <= Rat(0) || gamma > Rat(1))
        throw std::invalid_argument("gamma must be in (0,1]");
    const Rat inv_gamma = Rat(1) / gamma;
    const Rat lo = psi - inv_gamma;

    // Direct count over [psi - 1/gamma, psi).
    long long direct = 0;
    for (long long i = lo.floor() - 1; i <= psi.ceil() + 1; ++i) {
        if (Rat(i) >= lo && Rat(i) < psi) ++direct;
    }

    const Rat delta = inv_gamma - Rat(inv_gamma.floor());
    const Rat frac = psi - Rat(psi.floor());
    const bool plus_one = Rat(0) < frac && frac <= delta;
    const long long formula = inv_gamma.floor() + (plus_one ? 1 : 0);

    if (direct != formula)
        throw std::logic_error("interval_int_count: formula and direct count disagree");
    return IntervalCountResult{direct, plus_one};
}

bool check_nonincreasing_inequality(long long n, const Rat& gamma) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (gamma <= Rat(0) || gamma > Rat(1))
        throw std::invalid_argument("gamma must be in (0,1]");
    const long long a = gamma.num, b = gamma.den;
    const long long terms = (Rat(n) * gamma).ceil();

    // Compare sum a*g(i)/i^2 <= sum b/i^2 over a running common denominator;
    // the factor n is common to both sides and drops out.
    BigUint den(1), lhs(0), rhs(0);
    for (long long i = 1; i <= terms; ++i) {
        // g(i) = |{y >= 1 : (i-1)*b/a <= y < i*b/a}|
        const long long ylo = std::max<long long>(1, ceil_div(i128(i - 1) * b, a));
        long long yhi = floor_div(i128(i) * b, a);
        if ((i128(i) * b) % a == 0) --yhi;
        const long long g = yhi >= ylo ? yhi - ylo + 1 : 0;

        const unsigned __int128 ag128 =
            static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(g);
        if (ag128 > UINT64_MAX) throw std::overflow_error("gamma denominator too large");

        const std::uint64_t ii = static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(i);
        const std::uint64_t gg = std::gcd(den.mod_u64(ii), ii);
        const std::uint64_t grow = ii / gg;
        den.mul_u64(grow);
        lhs.mul_u64(grow);
        rhs.mul_u64(grow);

        BigUint unit = den;
        unit.divmod_u64(ii); // exact: ii | den now
        BigUint lterm = unit;
        lterm.mul_u64(static_cast<std::uint64_t>(ag128));
        lhs.add(lterm);
        unit.mul_u64(static_cast<std::uint64_t>(b));
        rhs.add(unit);
    }
    return lhs <= rhs;
}

PointBoundValues point_bounds(long long n, const Rat& gamma) {
    if (n < 2) throw std::invalid_argument("point_bounds requires n >= 2");
    if (gamma <= Rat(0) || gamma > Rat(1))
        throw std::invalid_argument("gamma must be in (0,1]");
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    const double g = gamma.value();
    PointBoundValues v;
    v.general = n * pi2_6 / g;
    v.refined = n * (pi2_6 - 0.5) / g;
    v.gamma_one = n * pi2_6 - 0.75 * n;
    return v;
}

} // namespace gw
