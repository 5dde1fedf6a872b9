#include <benchmark/benchmark.h>

#include <random>

#include "schub/matrix.hpp"
#include "schub/permutation.hpp"
#include "schub/schubert.hpp"
#include "schub/stanley.hpp"

static void BM_SchubertTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        schub::SchubertTable t(n);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_SchubertTable)->DenseRange(3, 7);

static void BM_ReducedWordsLongest(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const schub::Permutation w0 = schub::Permutation::longest(n);
    for (auto _ : state) {
        long count = 0;
        schub::for_each_reduced_word(w0, [&](const std::vector<int>&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_ReducedWordsLongest)->DenseRange(4, 6);

static void BM_StanleySweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int ell = 0; ell <= schub::choose2(n) - ell; ++ell) {
            auto rep = schub::verify_stanley(n, ell);
            benchmark::DoNotOptimize(rep);
        }
    }
}
BENCHMARK(BM_StanleySweep)->DenseRange(3, 5);

static void BM_BareissDeterminant(benchmark::State& state) {
    const std::size_t k = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> entry(-9, 9);
    schub::IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = entry(rng);
    for (auto _ : state) {
        schub::Int d = schub::determinant(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_BareissDeterminant)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
