#include <benchmark/benchmark.h>

#include "swlink/alexander.hpp"
#include "swlink/classify.hpp"
#include "swlink/sw.hpp"

namespace {

using namespace swlink;

void BM_AlexanderDeterminant(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(alexander_via_determinant(2, q));
}
BENCHMARK(BM_AlexanderDeterminant)->DenseRange(4, 12, 2);

void BM_AlexanderClosedForm(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(alexander_closed_form(8, q));
}
BENCHMARK(BM_AlexanderClosedForm)->DenseRange(4, 12, 2);

void BM_SwLinkSurgery(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sw_link_surgery({p, 4, 3, 2}));
}
BENCHMARK(BM_SwLinkSurgery)->DenseRange(2, 10, 2);

void BM_PolynomialMultiply(benchmark::State& state) {
    const int half_support = static_cast<int>(state.range(0));
    LaurentPolynomial a(symmetric_vars());
    LaurentPolynomial b(symmetric_vars());
    for (int i = -half_support; i <= half_support; ++i) {
        a.add_term({i, -i}, i + 2 * half_support + 1);
        b.add_term({-i, i + 1}, i - 2 * half_support - 1);
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialMultiply)->RangeMultiplier(2)->Range(8, 64);

void BM_BasicClassEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sw = sw_link_surgery({8, 8, n, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(basic_classes(sw));
}
BENCHMARK(BM_BasicClassEnumeration)->DenseRange(1, 4, 1);

}  // namespace

BENCHMARK_MAIN();
