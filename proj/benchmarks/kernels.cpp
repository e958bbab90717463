#include <benchmark/benchmark.h>

#include "equigo/eta.hpp"
#include "equigo/goettsche.hpp"
#include "equigo/kummer.hpp"

using namespace equigo;

static void BM_HilbertSliceK3(benchmark::State& state) {
    const auto s = k3_symplectic_preset(1);
    const int T = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_slice(s, 0, T));
}
BENCHMARK(BM_HilbertSliceK3)->Arg(8)->Arg(16)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_HilbertEquivariantOrder8(benchmark::State& state) {
    const auto s = k3_symplectic_preset(8);
    const int T = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_equivariant(s, T));
}
BENCHMARK(BM_HilbertEquivariantOrder8)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_SeriesMul(benchmark::State& state) {
    const int T = static_cast<int>(state.range(0));
    const auto a = hilbert_slice(k3_symplectic_preset(1), 0, T);
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_EtaExpand(benchmark::State& state) {
    const EtaQuotient q({{1, -2}, {2, -1}, {4, -1}, {8, -2}}, 1);
    const int T = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expand(q, T));
}
BENCHMARK(BM_EtaExpand)->Arg(40)->Arg(100);

static void BM_KummerSlice(benchmark::State& state) {
    const auto s = abelian_symplectic_preset(1);
    const int T = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kummer_slice(s, 0, T));
}
BENCHMARK(BM_KummerSlice)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
