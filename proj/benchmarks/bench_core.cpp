// Core hot paths, timed at a small and a moderate genus so growth with the
// 4(g-1) dimension is visible in one run.

#include "twistspec/digraph.hpp"
#include "twistspec/perron.hpp"
#include "twistspec/polynomial.hpp"
#include "twistspec/twists.hpp"

#include <benchmark/benchmark.h>

using namespace twistspec;

namespace {

void BM_TransitionMatrix(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(phi_matrix(g));
}
BENCHMARK(BM_TransitionMatrix)->Arg(9)->Arg(40)->Arg(200);

void BM_CharPoly(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const LinearMap a = phi_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPoly)->Arg(6)->Arg(9)->Arg(14);

void BM_PerronRoot(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const LinearMap a = phi_matrix(g);
    const Rat tol(1, Int("10000000000"));
    for (auto _ : state) benchmark::DoNotOptimize(perron_root(a, tol));
}
BENCHMARK(BM_PerronRoot)->Arg(9)->Arg(20);

void BM_PrimitivityExponent(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const LinearMap a = phi_matrix(g);
    for (auto _ : state) benchmark::DoNotOptimize(primitivity_exponent(a, 2 * g - 1));
}
BENCHMARK(BM_PrimitivityExponent)->Arg(9)->Arg(40);

void BM_PathCounts(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    CurveSystem sys(g);
    const Digraph dg = from_matrix(sys, phi_matrix(sys), Orientation::ColumnsAsImages);
    for (auto _ : state) benchmark::DoNotOptimize(path_counts(dg, g - 2));
}
BENCHMARK(BM_PathCounts)->Arg(9)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
