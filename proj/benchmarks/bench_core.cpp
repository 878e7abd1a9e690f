#include <benchmark/benchmark.h>

#include "qgordon/agcore.hpp"
#include "qgordon/paths.hpp"
#include "qgordon/qalgebra.hpp"
#include "qgordon/rrpoly.hpp"
#include "qgordon/series_checks.hpp"

namespace {

using namespace qgordon;

void BM_PolyMultiply(benchmark::State& state) {
    const std::int64_t L = state.range(0);
    const LaurentPoly a = rr_fermionic(RRKind::E, L);
    const LaurentPoly b = rr_fermionic(RRKind::D, L);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_PolyMultiply)->Arg(20)->Arg(40)->Arg(80);

void BM_QBinomial(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        // the memo cache makes repeated lookups cheap; this measures the
        // cached path dominating the multisum inner loops
        benchmark::DoNotOptimize(q_binomial(n, n));
    }
}
BENCHMARK(BM_QBinomial)->Arg(10)->Arg(20)->Arg(40);

void BM_FTilde(benchmark::State& state) {
    const std::int64_t L = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_tilde(2, 1, 1, L));
    }
}
BENCHMARK(BM_FTilde)->Arg(8)->Arg(12)->Arg(16);

void BM_BigFBoundary(benchmark::State& state) {
    const std::int64_t M = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(big_f(2, 1, 2, M, M));
    }
}
BENCHMARK(BM_BigFBoundary)->Arg(6)->Arg(10);

void BM_SeriesInverseProduct(benchmark::State& state) {
    const std::int64_t cutoff = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_inverse_product(7, {1, 2, 3, 4, 5, 6}, cutoff));
    }
}
BENCHMARK(BM_SeriesInverseProduct)->Arg(50)->Arg(100)->Arg(200);

void BM_PathEnumeration(benchmark::State& state) {
    const std::int64_t L = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(path_gf(0, L, 0, 0));
    }
}
BENCHMARK(BM_PathEnumeration)->Arg(10)->Arg(14)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
