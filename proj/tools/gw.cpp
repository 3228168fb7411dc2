// gw: enumerate maximal alpha-gapped repeats/palindromes, verify the
// counting bounds, emit point images, and differential-fuzz the fast
// enumerators against the brute-force oracle.

#include "gw/bounds.hpp"
#include "gw/covermap.hpp"
#include "gw/enumerate.hpp"
#include "gw/oracle.hpp"
#include "gw/parallel.hpp"
#include "gw/prng.hpp"
#include "gw/rational.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

using namespace gw;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOpts {
    std::string text;
    std::string file;
    std::vector<std::uint64_t> random; // N SIGMA SEED
    bool has_text = false;
    bool has_file = false;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--text", in.text, "Input word as literal text (bytes)")
        ->each([&in](const std::string&) { in.has_text = true; });
    cmd->add_option("--file", in.file, "Input word from a file, read as raw bytes")
        ->each([&in](const std::string&) { in.has_file = true; });
    cmd->add_option("--random", in.random,
                    "Random input word: N SIGMA SEED (splitmix64 stream)")
        ->expected(3);
}

Word load_word(const InputOpts& in) {
    const int sources =
        (in.has_text ? 1 : 0) + (in.has_file ? 1 : 0) + (!in.random.empty() ? 1 : 0);
    if (sources != 1)
        throw UsageError("exactly one of --text, --file, --random is required");
    if (in.has_text) return Word::from_bytes(in.text);
    if (!in.random.empty())
        return random_word(static_cast<Pos>(in.random[0]),
                           static_cast<std::uint32_t>(in.random[1]), in.random[2]);
    std::ifstream f(in.file, std::ios::binary);
    if (!f) throw UsageError("cannot read file: " + in.file);
    std::ostringstream ss;
    ss << f.rdbuf();
    return Word::from_bytes(ss.str());
}

Rat parse_rat_flag(const std::string& text, const char* name) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError(std::string("bad rational for ") + name + ": " + text);
    }
}

// --- row printers ------------------------------------------------------

void print_pair_row(const Segment& l, const Segment& r, bool tsv) {
    const long long period = r.beg - l.beg;
    const long long gap = r.beg - l.end - 1;
    const long long u = l.length();
    if (tsv)
        std::printf("%lld\t%lld\t%lld\t%lld\t%lld\t%lld\t%lld\n", l.beg, l.end, r.beg,
                    r.end, period, gap, u);
    else
        std::printf("{\"left_beg\":%lld,\"left_end\":%lld,\"right_beg\":%lld,"
                    "\"right_end\":%lld,\"period\":%lld,\"gap\":%lld,\"arm_len\":%lld}\n",
                    l.beg, l.end, r.beg, r.end, period, gap, u);
}

void print_run_row(const Run& run, bool tsv) {
    const std::string exp = run.exponent().str();
    if (tsv)
        std::printf("%lld\t%lld\t%lld\t%s\n", run.beg, run.end, run.period, exp.c_str());
    else
        std::printf("{\"beg\":%lld,\"end\":%lld,\"period\":%lld,\"exponent\":\"%s\"}\n",
                    run.beg, run.end, run.period, exp.c_str());
}

void print_segment_row(const Segment& s, bool tsv) {
    if (tsv)
        std::printf("%lld\t%lld\n", s.beg, s.end);
    else
        std::printf("{\"beg\":%lld,\"end\":%lld,\"len\":%lld}\n", s.beg, s.end,
                    s.length());
}

// --- enumerate ---------------------------------------------------------

int cmd_enumerate(const InputOpts& in, const std::string& kind,
                  const std::string& alpha_text, const std::string& format) {
    const bool tsv = format == "tsv";
    const Word w = load_word(in);
    if (kind == "repeats" || kind == "palindromes") {
        if (alpha_text.empty())
            throw UsageError("--alpha is required for --kind " + kind);
        const Rat alpha = parse_rat_flag(alpha_text, "--alpha");
        if (alpha < Rat(1)) throw UsageError("alpha must be >= 1");
        if (kind == "repeats") {
            for (const auto& r : enumerate_all_repeats(w, alpha))
                print_pair_row(r.left, r.right, tsv);
        } else {
            for (const auto& g : palindromes_by_diagonal(w, alpha))
                print_pair_row(g.left, g.right, tsv);
        }
    } else if (kind == "runs") {
        for (const auto& run : compute_runs(w)) print_run_row(run, tsv);
    } else if (kind == "ordinary") {
        for (const auto& s : manacher(w)) print_segment_row(s, tsv);
    } else {
        throw UsageError("unknown --kind: " + kind);
    }
    return kExitOk;
}

// --- verify ------------------------------------------------------------

ordered_json report_to_json(const BoundReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["n"] = r.n;
    j["alpha"] = r.alpha.str();
    j["beta_repeats"] = r.beta_repeats.str();
    j["beta_palindromes"] = r.beta_palindromes.str();
    j["counts"] = {{"repeats", r.repeats_total},
                   {"repeats_periodic", r.repeats_periodic},
                   {"repeats_aperiodic", r.repeats_aperiodic},
                   {"palindromes", r.palindromes_total},
                   {"palindromes_ordinary", r.palindromes_ordinary},
                   {"palindromes_periodic", r.palindromes_periodic},
                   {"palindromes_aperiodic", r.palindromes_aperiodic},
                   {"runs", r.run_count}};
    j["exponent_sum"] = r.exponent_sum.str();
    j["exponent_sum_value"] = r.exponent_sum.to_double();
    j["bounds"] = {{"repeats_total", r.repeats_total_bound},
                   {"palindromes_total", r.palindromes_total_bound},
                   {"palindromes_ordinary", r.ordinary_bound},
                   {"repeats_periodic", r.repeats_periodic_bound},
                   {"palindromes_periodic", r.palindromes_periodic_bound},
                   {"palindromes_aperiodic", r.palindromes_aperiodic_bound},
                   {"exponent_sum", r.exponent_sum_bound},
                   {"runs", r.run_count_bound}};
    j["conflicts"] = {{"phi_t_aperiodic_palindromes", r.phi_t_conflicts},
                      {"phi_aperiodic_repeats", r.phi_conflicts}};
    j["checks"] = {{"repeats_total", r.pass_repeats_total},
                   {"palindromes_total", r.pass_palindromes_total},
                   {"palindromes_ordinary", r.pass_ordinary},
                   {"repeats_periodic", r.pass_repeats_periodic},
                   {"palindromes_periodic", r.pass_palindromes_periodic},
                   {"palindromes_aperiodic", r.pass_palindromes_aperiodic},
                   {"exponent_sum", r.pass_exponent_sum},
                   {"runs", r.pass_run_count},
                   {"phi_t_conflict_free", r.pass_phi_t_conflict_free},
                   {"phi_conflict_free", r.pass_phi_conflict_free}};
    j["all_pass"] = r.all_pass();
    return j;
}

int cmd_verify(const InputOpts& in, const std::string& alpha_text,
               const std::string& beta_rep_text, const std::string& beta_pal_text) {
    const Rat alpha = parse_rat_flag(alpha_text, "--alpha");
    if (alpha <= Rat(1)) throw UsageError("verify requires alpha > 1");
    const Rat beta_rep = parse_rat_flag(beta_rep_text, "--beta-repeats");
    const Rat beta_pal = parse_rat_flag(beta_pal_text, "--beta-palindromes");
    // The per-class analyses need beta in these ranges.
    if (beta_rep < Rat(2, 3) || beta_rep >= Rat(1))
        throw UsageError("--beta-repeats must be in [2/3, 1)");
    if (beta_pal < Rat(6, 7) || beta_pal >= Rat(1))
        throw UsageError("--beta-palindromes must be in [6/7, 1)");
    const Word w = load_word(in);
    BoundReport report;
    try {
        report = verify_bounds(w, alpha, beta_rep, beta_pal);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << report_to_json(report).dump(2) << "\n";
    return report.all_pass() ? kExitOk : kExitFail;
}

// --- points ------------------------------------------------------------

int cmd_points(const InputOpts& in, const std::string& which,
               const std::string& alpha_text, std::string beta_text,
               std::string gamma_text, const std::string& format) {
    const bool tsv = format == "tsv";
    if (which != "phi" && which != "phi_t")
        throw UsageError("--which must be phi or phi_t");
    if (alpha_text.empty()) throw UsageError("--alpha is required");
    const Rat alpha = parse_rat_flag(alpha_text, "--alpha");
    if (alpha < Rat(1)) throw UsageError("alpha must be >= 1");
    if (beta_text.empty()) beta_text = which == "phi" ? "2/3" : "6/7";
    const Rat beta = parse_rat_flag(beta_text, "--beta");
    Rat gamma;
    if (gamma_text.empty())
        gamma = (Rat(1) - beta) / alpha; // the gamma the cover analysis uses
    else
        gamma = parse_rat_flag(gamma_text, "--gamma");
    if (gamma <= Rat(0) || gamma > Rat(1)) throw UsageError("gamma must be in (0,1]");

    const Word w = load_word(in);
    std::vector<Point> pts;
    if (which == "phi") {
        for (const auto& r : repeats_by_period(w, alpha)) pts.push_back(phi(r));
    } else {
        const auto classes =
            classify_palindromes(palindromes_by_diagonal(w, alpha), w, beta);
        for (const auto& g : classes.aperiodic) pts.push_back(phi_t(g));
    }
    for (const Point& p : pts) {
        if (tsv)
            std::printf("%lld\t%lld\n", p.x, p.y);
        else
            std::printf("{\"x\":%lld,\"y\":%lld}\n", p.x, p.y);
    }
    const auto conflicts = cover_conflicts(pts, gamma);
    if (tsv)
        std::printf("# points=%zu gamma=%s conflicts=%zu\n", pts.size(),
                    gamma.str().c_str(), conflicts.size());
    else
        std::printf("{\"points\":%zu,\"gamma\":\"%s\",\"conflicts\":%zu}\n", pts.size(),
                    gamma.str().c_str(), conflicts.size());
    return kExitOk;
}

// --- fuzz --------------------------------------------------------------

std::string word_literal(const Word& w) {
    bool printable = w.length() > 0;
    for (Symbol s : w.symbols())
        if (s < 0x20 || s > 0x7e) { printable = false; break; }
    std::ostringstream os;
    if (printable) {
        os << '"';
        for (Symbol s : w.symbols()) os << static_cast<char>(s);
        os << '"';
    } else {
        os << '[';
        for (size_t i = 0; i < w.symbols().size(); ++i) {
            if (i) os << ',';
            os << w.symbols()[i];
        }
        os << ']';
    }
    return os.str();
}

template <class T>
std::optional<std::string> first_difference(const std::vector<T>& got,
                                            const std::vector<T>& want) {
    if (got == want) return std::nullopt;
    std::ostringstream os;
    os << "got " << got.size() << " elements, want " << want.size();
    return os.str();
}

struct FuzzConfig {
    std::uint64_t trials = 100;
    std::uint64_t max_n = 50;
    std::uint64_t sigma = 2;
    std::uint64_t seed = 1;
    bool inject_fault = false;
    Pos oracle_cap = 120;
};

// One trial; returns a description of the first mismatch, if any.
std::optional<std::string> run_trial(const FuzzConfig& cfg, std::uint64_t trial) {
    const std::uint64_t word_seed = cfg.seed + trial;
    SplitMix64 rng(word_seed);
    const Pos n = 1 + static_cast<Pos>(rng.below(cfg.max_n));
    std::vector<Symbol> sym;
    for (Pos i = 0; i < n; ++i)
        sym.push_back(static_cast<Symbol>(rng.below(cfg.sigma)));
    const Word w{std::move(sym)};

    static const Rat kAlphas[] = {Rat(101, 100), Rat(3, 2), Rat(2), Rat(4)};
    const Rat alpha = kAlphas[rng.below(4)];
    const Rat big = unbounded_alpha(w);

    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << what << "\n  word " << word_literal(w) << " (n=" << n << ")";
        return os.str();
    };

    auto runs = compute_runs(w);
    auto reps = repeats_by_period(w, big);
    if (cfg.inject_fault && !reps.empty()) reps.pop_back();
    auto pals = palindromes_by_diagonal(w, big);
    auto ordinary = manacher(w);

    if (w.length() <= cfg.oracle_cap) {
        if (auto d = first_difference(runs, oracle_runs(w)))
            return fail("compute_runs disagrees with oracle_runs: " + *d);
        if (auto d = first_difference(reps, oracle_maximal_gapped_repeats(w)))
            return fail("repeats_by_period disagrees with oracle: " + *d);
        if (auto d = first_difference(pals, oracle_maximal_gapped_palindromes(w)))
            return fail("palindromes_by_diagonal disagrees with oracle: " + *d);
        if (auto d = first_difference(ordinary, oracle_maximal_ordinary_palindromes(w)))
            return fail("manacher disagrees with oracle: " + *d);
    }

    // overlap fast path vs the overlap subset of the scan
    {
        std::vector<GappedRepeat> expect;
        for (const auto& r : reps)
            if (r.left.end >= r.right.beg) expect.push_back(r);
        if (auto d = first_difference(overlap_repeats_from_runs(w, runs), expect))
            return fail("overlap_repeats_from_runs mismatch: " + *d);
    }
    if (auto d = first_difference(enumerate_all_repeats(w, alpha),
                                  repeats_by_period(w, alpha)))
        return fail("enumerate_all_repeats mismatch: " + *d);

    // phi: injective, restore identity, shift exclusion
    {
        std::set<Point> image;
        for (const auto& r : reps) {
            const Point p = phi(r);
            if (!in_region(p, w.length())) return fail("phi image left the region");
            if (!image.insert(p).second) return fail("phi is not injective");
            auto restored = restore_repeat_from_point(w, p);
            if (!restored || !(*restored == r))
                return fail("restore_repeat_from_point is not the inverse of phi");
        }
        for (const Point& p : image)
            if (image.count({p.x + 1, p.y})) return fail("phi shift exclusion violated");
    }

    // phi_t on beta-aperiodic palindromes: injective, restore identity,
    // exclusion family, conflict-free at (1-beta)/alpha
    {
        const Rat beta(6, 7);
        auto classes = classify_palindromes(palindromes_by_diagonal(w, alpha), w, beta);
        std::set<Point> image;
        std::vector<Point> pts;
        for (const auto& g : classes.aperiodic) {
            const Point p = phi_t(g);
            if (!in_region(p, w.length())) return fail("phi_t image left the region");
            if (p.y < 3) return fail("phi_t image with d < 3");
            if (!image.insert(p).second) return fail("phi_t is not injective");
            pts.push_back(p);
            auto restored = restore_palindrome_from_point(w, p);
            if (!restored || !(*restored == g))
                return fail("restore_palindrome_from_point is not the inverse of phi_t");
        }
        for (const auto& g : classes.aperiodic) {
            const Point p = phi_t(g);
            const Pos u = g.arm_len();
            for (Pos i = -(u / 2) - 1; i <= (u + 1) / 2; ++i)
                if (i != 0 && image.count({p.x + i, p.y - 2 * i}))
                    return fail("phi_t exclusion family violated");
        }
        if (!cover_conflicts(pts, (Rat(1) - beta) / alpha).empty())
            return fail("phi_t image has cover conflicts at (1-beta)/alpha");
    }

    // arbitrary points: restore must yield members of the maximal sets or nothing
    for (int k = 0; k < 16 && n >= 2; ++k) {
        const Point p{1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(n))),
                      1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(n)))};
        if (auto r = restore_repeat_from_point(w, p)) {
            if (!(phi(*r) == p)) return fail("restore_repeat image mismatch");
            if (!std::binary_search(reps.begin(), reps.end(), *r))
                return fail("restore_repeat returned a non-maximal repeat");
        }
        if (auto g = restore_palindrome_from_point(w, p)) {
            if (!std::binary_search(pals.begin(), pals.end(), *g))
                return fail("restore_palindrome returned a non-maximal palindrome");
        }
    }

    if (w.length() >= 2) {
        auto report = verify_bounds(w, alpha);
        if (!report.all_pass()) return fail("verify_bounds reports a failed check");
    }
    return std::nullopt;
}

int cmd_fuzz(const FuzzConfig& cfg) {
    if (cfg.sigma == 0 || cfg.max_n == 0)
        throw UsageError("--sigma and --max-n must be positive");
    std::vector<std::optional<std::string>> results(cfg.trials);
    parallel_for(cfg.trials, thread_cap_from_env(),
                 [&](std::size_t t) { results[t] = run_trial(cfg, t); });
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        if (!results[t]) continue;
        std::cout << "FAIL trial " << t << ": " << *results[t] << "\n";
        std::cout << "reproduce: gw fuzz --trials 1 --max-n " << cfg.max_n
                  << " --sigma " << cfg.sigma << " --seed " << (cfg.seed + t)
                  << (cfg.inject_fault ? " --inject-fault" : "") << "\n";
        return kExitFail;
    }
    std::cout << "fuzz: " << cfg.trials << " trials, max-n " << cfg.max_n << ", sigma "
              << cfg.sigma << ", seed " << cfg.seed << ": all checks passed\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal alpha-gapped repeats and palindromes workbench"};
    app.require_subcommand(1);

    InputOpts in;
    std::string kind = "repeats", alpha_text, format = "jsonl";
    std::string beta_rep = "2/3", beta_pal = "6/7";
    std::string which = "phi", beta_text, gamma_text;
    FuzzConfig fuzz;

    auto* enumerate = app.add_subcommand("enumerate", "List maximal structures");
    add_input_options(enumerate, in);
    enumerate->add_option("--kind", kind, "repeats|palindromes|runs|ordinary");
    enumerate->add_option("--alpha", alpha_text, "Rational alpha >= 1");
    enumerate->add_option("--format", format, "jsonl|tsv")
        ->check(CLI::IsMember({"jsonl", "tsv"}));

    auto* verify = app.add_subcommand("verify", "Evaluate every counting bound");
    add_input_options(verify, in);
    verify->add_option("--alpha", alpha_text, "Rational alpha > 1")->required();
    verify->add_option("--beta-repeats", beta_rep, "Rational in (0,1), default 2/3");
    verify->add_option("--beta-palindromes", beta_pal, "Rational in (0,1), default 6/7");

    auto* points = app.add_subcommand("points", "Emit phi / phi_t image points");
    add_input_options(points, in);
    points->add_option("--which", which, "phi|phi_t");
    points->add_option("--alpha", alpha_text, "Rational alpha >= 1");
    points->add_option("--beta", beta_text, "Rational in (0,1); default 2/3 or 6/7");
    points->add_option("--gamma", gamma_text, "Rational in (0,1]; default (1-beta)/alpha");
    points->add_option("--format", format, "jsonl|tsv")
        ->check(CLI::IsMember({"jsonl", "tsv"}));

    auto* fz = app.add_subcommand("fuzz", "Differential tests on random words");
    fz->add_option("--trials", fuzz.trials, "Number of random words");
    fz->add_option("--max-n", fuzz.max_n, "Maximum word length");
    fz->add_option("--sigma", fuzz.sigma, "Alphabet size");
    fz->add_option("--seed", fuzz.seed, "Base seed; trial t uses seed+t");
    fz->add_flag("--inject-fault", fuzz.inject_fault,
                 "Drop one repeat before comparing (harness self-test)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(in, kind, alpha_text, format);
        if (verify->parsed()) return cmd_verify(in, alpha_text, beta_rep, beta_pal);
        if (points->parsed())
            return cmd_points(in, which, alpha_text, beta_text, gamma_text, format);
        if (fz->parsed()) return cmd_fuzz(fuzz);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
