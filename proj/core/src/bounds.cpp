#include "gw/bounds.hpp"

#include "gw/covermap.hpp"
#include "gw/enumerate.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace gw {

namespace {

constexpr double kSlack = 1e-6;

// Longest periodic prefix of f: largest ell with some p <= ell/2 such that
// p + z[p] >= ell. best(j) = max over p <= j of p + z[p] is monotone, so one
// ascending sweep suffices.
Pos longest_periodic_prefix_of(std::span<const Symbol> f) {
    const Pos len = static_cast<Pos>(f.size());
    if (len < 2) return 0;
    auto z = z_function(f);
    Pos answer = 0, best = 0;
    for (Pos ell = 2; ell <= len; ++ell) {
        const Pos p = ell / 2;
        best = std::max(best, p + z[static_cast<size_t>(p)]);
        if (best >= ell) answer = ell;
    }
    return answer;
}

} // namespace

BigRat sum_of_exponents(std::span<const Run> runs) {
    BigRat sum;
    for (const Run& r : runs)
        sum.add_fraction(static_cast<std::uint64_t>(r.length()),
                         static_cast<std::uint64_t>(r.period));
    return sum;
}

Pos longest_periodic_suffix_len(const Word& w, Segment s) {
    auto f = factor(w, s);
    std::reverse(f.begin(), f.end());
    return longest_periodic_prefix_of(f);
}

Pos longest_periodic_prefix_len(const Word& w, Segment s) {
    auto f = factor(w, s);
    return longest_periodic_prefix_of(f);
}

PalindromeClasses classify_palindromes(std::span<const GappedPalindrome> pals,
                                       const Word& w, const Rat& beta) {
    PalindromeClasses out;
    for (const GappedPalindrome& g : pals) {
        if (g.ordinary()) {
            out.ordinary.push_back(g);
            continue;
        }
        const Pos len = longest_periodic_suffix_len(w, g.left);
        // len >= beta * u
        if (static_cast<__int128>(len) * beta.den >=
            static_cast<__int128>(beta.num) * g.arm_len())
            out.periodic.push_back(g);
        else
            out.aperiodic.push_back(g);
    }
    return out;
}

RepeatClasses classify_repeats(std::span<const GappedRepeat> reps,
                               const Word& w, const Rat& beta) {
    RepeatClasses out;
    for (const GappedRepeat& r : reps) {
        const Pos len = longest_periodic_prefix_len(w, r.left);
        if (static_cast<__int128>(len) * beta.den >=
            static_cast<__int128>(beta.num) * r.arm_len())
            out.periodic.push_back(r);
        else
            out.aperiodic.push_back(r);
    }
    return out;
}

BoundReport verify_bounds(const Word& w, const Rat& alpha,
                          const Rat& beta_repeats, const Rat& beta_palindromes) {
    if (alpha <= Rat(1)) throw std::invalid_argument("verify_bounds requires alpha > 1");
    if (w.length() < 2) throw std::invalid_argument("verify_bounds requires n >= 2");
    if (beta_repeats <= Rat(0) || beta_repeats >= Rat(1) ||
        beta_palindromes <= Rat(0) || beta_palindromes >= Rat(1))
        throw std::invalid_argument("beta must be in (0,1)");

    const Pos n = w.length();
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    const double av = alpha.value();
    const double nd = static_cast<double>(n);

    BoundReport rep;
    rep.n = n;
    rep.alpha = alpha;
    rep.beta_repeats = beta_repeats;
    rep.beta_palindromes = beta_palindromes;

    const auto runs = compute_runs(w);
    rep.run_count = static_cast<long long>(runs.size());
    rep.exponent_sum = sum_of_exponents(runs);

    const auto repeats = repeats_by_period(w, alpha);
    const auto pals = palindromes_by_diagonal(w, alpha);
    const auto rc = classify_repeats(repeats, w, beta_repeats);
    const auto pc = classify_palindromes(pals, w, beta_palindromes);

    rep.repeats_total = static_cast<long long>(repeats.size());
    rep.repeats_periodic = static_cast<long long>(rc.periodic.size());
    rep.repeats_aperiodic = static_cast<long long>(rc.aperiodic.size());
    rep.palindromes_total = static_cast<long long>(pals.size());
    rep.palindromes_ordinary = static_cast<long long>(pc.ordinary.size());
    rep.palindromes_periodic = static_cast<long long>(pc.periodic.size());
    rep.palindromes_aperiodic = static_cast<long long>(pc.aperiodic.size());

    const double E = rep.exponent_sum.to_double();
    rep.repeats_total_bound = 3.0 * (pi2_6 + 2.5) * av * nd;
    rep.palindromes_total_bound = 7.0 * (pi2_6 + 0.5) * av * nd - 5.0 * nd - 1.0;
    rep.ordinary_bound = 2 * n - 1;
    rep.repeats_periodic_bound = 2.0 * av * E / beta_repeats.value();
    rep.palindromes_periodic_bound = 2.0 * (av - 1.0) * E / beta_palindromes.value();
    rep.palindromes_aperiodic_bound =
        av * nd * (pi2_6 - 0.5) / (1.0 - beta_palindromes.value());
    rep.exponent_sum_bound = 3 * n;
    rep.run_count_bound = n;

    rep.pass_repeats_total =
        static_cast<double>(rep.repeats_total) <= rep.repeats_total_bound - kSlack;
    rep.pass_palindromes_total =
        static_cast<double>(rep.palindromes_total) <= rep.palindromes_total_bound - kSlack;
    rep.pass_ordinary = rep.palindromes_ordinary <= rep.ordinary_bound;
    rep.pass_palindromes_aperiodic =
        static_cast<double>(rep.palindromes_aperiodic) <=
        rep.palindromes_aperiodic_bound - kSlack;

    const auto u64 = [](long long v) { return static_cast<std::uint64_t>(v); };

    // periodic repeats <= 2 alpha E / beta, exactly:
    // count * alpha.den * beta.num * E.den <= 2 * alpha.num * beta.den * E.num
    rep.pass_repeats_periodic =
        compare_products(rep.exponent_sum.den(),
                         {u64(rep.repeats_periodic), u64(alpha.den), u64(beta_repeats.num)},
                         rep.exponent_sum.num(),
                         {2, u64(alpha.num), u64(beta_repeats.den)}) <= 0;

    // periodic palindromes <= 2 (alpha-1) E / beta, exactly
    rep.pass_palindromes_periodic =
        compare_products(rep.exponent_sum.den(),
                         {u64(rep.palindromes_periodic), u64(alpha.den),
                          u64(beta_palindromes.num)},
                         rep.exponent_sum.num(),
                         {2, u64(alpha.num - alpha.den), u64(beta_palindromes.den)}) <= 0;

    // E(w) < 3n, exactly
    rep.pass_exponent_sum =
        compare_products(rep.exponent_sum.num(), {},
                         rep.exponent_sum.den(),
                         {static_cast<std::uint64_t>(3 * n)}) < 0;
    rep.pass_run_count = rep.run_count < rep.run_count_bound;

    // Conflict-freeness of the point images at gamma = (1-beta)/alpha.
    {
        const Rat gamma_p = (Rat(1) - beta_palindromes) / alpha;
        std::vector<Point> img;
        img.reserve(pc.aperiodic.size());
        for (const auto& g : pc.aperiodic) img.push_back(phi_t(g));
        rep.phi_t_conflicts =
            static_cast<long long>(cover_conflicts(img, gamma_p).size());
        rep.pass_phi_t_conflict_free = rep.phi_t_conflicts == 0;
    }
    {
        const Rat gamma_r = (Rat(1) - beta_repeats) / alpha;
        std::vector<Point> img;
        img.reserve(rc.aperiodic.size());
        for (const auto& r : rc.aperiodic) img.push_back(phi(r));
        rep.phi_conflicts =
            static_cast<long long>(cover_conflicts(img, gamma_r).size());
        rep.pass_phi_conflict_free = rep.phi_conflicts == 0;
    }

    return rep;
}

} // namespace gw
