#include <benchmark/benchmark.h>

#include "stiefel/enumerate.hpp"
#include "stiefel/parity.hpp"
#include "stiefel/steenrod.hpp"

using namespace stiefel;

static void BM_binom_parity(benchmark::State& state) {
    std::int64_t a = 0;
    for (auto _ : state) {
        for (std::int64_t b = 0; b < 64; ++b) benchmark::DoNotOptimize(binom_parity(a + b * 37, b));
        a = (a + 1) & 0xffff;
    }
    state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_binom_parity);

// Sq^i on every basis monomial of V_k(R^n).
static void BM_sq_all_basis(benchmark::State& state) {
    const auto n = static_cast<int>(state.range(0));
    const auto k = static_cast<int>(state.range(1));
    const auto ring = make_ring(n, k);
    for (auto _ : state) {
        for (std::int64_t d = 0; d <= ring.top_degree(); ++d) {
            for (Monomial m : basis(ring, d)) {
                for (std::int64_t i = 1; i <= d; ++i) benchmark::DoNotOptimize(sq(ring, i, m));
            }
        }
    }
}
BENCHMARK(BM_sq_all_basis)->Args({9, 4})->Args({12, 4})->Args({14, 5});

static void BM_enumerate_wu(benchmark::State& state) {
    const auto ring = make_ring(9, 4);
    EnumerateOptions opts;
    opts.require_wu = true;
    opts.prune = state.range(0) != 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_systems(ring, opts, [](const CharClassSystem&) {}));
    }
    state.SetLabel(opts.prune ? "pruned" : "brute force");
}
BENCHMARK(BM_enumerate_wu)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
