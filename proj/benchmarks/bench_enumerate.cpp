#include "gw/bounds.hpp"
#include "gw/enumerate.hpp"
#include "gw/prng.hpp"

#include <benchmark/benchmark.h>

using namespace gw;

namespace {

Word bench_word(Pos n, std::uint32_t sigma) { return random_word(n, sigma, 0x5eed); }

void BM_ComputeRuns(benchmark::State& state) {
    const Word w = bench_word(state.range(0), 2);
    for (auto _ : state) {
        auto runs = compute_runs(w);
        benchmark::DoNotOptimize(runs);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeRuns)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void BM_Manacher(benchmark::State& state) {
    const Word w = bench_word(state.range(0), 2);
    for (auto _ : state) {
        auto pals = manacher(w);
        benchmark::DoNotOptimize(pals);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Manacher)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void BM_OverlapRepeats(benchmark::State& state) {
    const Word w = bench_word(state.range(0), 2);
    const auto runs = compute_runs(w);
    for (auto _ : state) {
        auto reps = overlap_repeats_from_runs(w, runs);
        benchmark::DoNotOptimize(reps);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OverlapRepeats)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity();

void BM_RepeatsByPeriod(benchmark::State& state) {
    const Word w = bench_word(state.range(0), 2);
    for (auto _ : state) {
        auto reps = repeats_by_period(w, Rat(2));
        benchmark::DoNotOptimize(reps);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RepeatsByPeriod)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

void BM_PalindromesByDiagonal(benchmark::State& state) {
    const Word w = bench_word(state.range(0), 2);
    for (auto _ : state) {
        auto pals = palindromes_by_diagonal(w, Rat(2));
        benchmark::DoNotOptimize(pals);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PalindromesByDiagonal)->RangeMultiplier(2)->Range(1 << 8, 1 << 12)->Complexity();

void BM_VerifyBounds(benchmark::State& state) {
    const Word w = bench_word(state.range(0), 2);
    for (auto _ : state) {
        auto report = verify_bounds(w, Rat(2));
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyBounds)->Arg(1 << 8)->Arg(1 << 10);

} // namespace

BENCHMARK_MAIN();
