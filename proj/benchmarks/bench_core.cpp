#include <benchmark/benchmark.h>

#include <random>

#include "niep/classify.hpp"
#include "niep/meehan.hpp"
#include "niep/threshold.hpp"
#include "niep/verify.hpp"

using namespace niep;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

MatrixQ sample_matrix(int n) {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 4);
    MatrixQ m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

void BM_Charpoly5(benchmark::State& state) {
    const MatrixQ m = sample_matrix(5);
    for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_Charpoly5);

void BM_Minpoly5(benchmark::State& state) {
    const MatrixQ m = family_lm_sigma_hat().eval(R(1));
    for (auto _ : state) benchmark::DoNotOptimize(minpoly(m));
}
BENCHMARK(BM_Minpoly5);

void BM_Rank5(benchmark::State& state) {
    const MatrixQ m = sample_matrix(5);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank5);

void BM_IsolateThresholdRoot(benchmark::State& state) {
    const Poly quartic{R(-15), R(0), R(78), R(0), R(1)};
    const Rational eps(1, 1000000000L);
    for (auto _ : state) benchmark::DoNotOptimize(isolate_smallest_nonneg_root(quartic, eps));
}
BENCHMARK(BM_IsolateThresholdRoot);

void BM_FamilyThreshold(benchmark::State& state) {
    const Rational eps(1, 1000000000L);
    for (auto _ : state)
        benchmark::DoNotOptimize(family_nonneg_threshold(family_lm_sigma_hat(), eps));
}
BENCHMARK(BM_FamilyThreshold);

void BM_ClassifyTraceZero(benchmark::State& state) {
    const Spectrum sp(std::vector<Rational>{R(3), R(3), R(-2), R(-2), R(-2)});
    for (auto _ : state) benchmark::DoNotOptimize(classify(sp));
}
BENCHMARK(BM_ClassifyTraceZero);

void BM_MeehanFit(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(meehan_fit(0.52));
}
BENCHMARK(BM_MeehanFit);

}  // namespace

BENCHMARK_MAIN();
