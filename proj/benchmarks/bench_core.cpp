#include <benchmark/benchmark.h>

#include "fct/catalan.hpp"
#include "fct/comb.hpp"
#include "fct/gamma.hpp"
#include "fct/state_space.hpp"
#include "fct/tied_map.hpp"
#include "fct/verify.hpp"

namespace {

void BM_EnumerateTrees(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fct::enumerate_trees(n));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * fct::tree_count(n)));
}
BENCHMARK(BM_EnumerateTrees)->DenseRange(8, 12, 2);

void BM_BuildGamma(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fct::build_gamma(n));
    }
}
BENCHMARK(BM_BuildGamma)->DenseRange(8, 11, 1)->Unit(benchmark::kMillisecond);

// Fresh StateSpace each iteration: construction plus one component pass.
void BM_StateComponents(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        const fct::StateSpace space(n);
        benchmark::DoNotOptimize(space.components(threads).data());
    }
}
BENCHMARK(BM_StateComponents)->Args({7, 1})->Args({8, 1})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);

void BM_SignTheorem(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fct::verify_sign_theorem(n));
    }
}
BENCHMARK(BM_SignTheorem)->DenseRange(5, 7, 1)->Unit(benchmark::kMillisecond);

void BM_TaitFirstColoring(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const fct::CubicGraph g = fct::tie(fct::Tree::left_comb(n), fct::Tree::right_comb(n)).graph();
    for (auto _ : state) {
        benchmark::DoNotOptimize(fct::tait_colorings(g, 1));
    }
}
BENCHMARK(BM_TaitFirstColoring)->RangeMultiplier(2)->Range(4, 16);

void BM_CombPathAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto trees = fct::enumerate_trees(n);
    for (auto _ : state) {
        for (const auto& t : trees) {
            benchmark::DoNotOptimize(fct::comb_path(t));
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trees.size()));
}
BENCHMARK(BM_CombPathAll)->DenseRange(7, 9, 1)->Unit(benchmark::kMillisecond);

void BM_FindAdmissiblePath(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const fct::Tree l = fct::Tree::left_comb(n);
    const fct::Tree r = fct::Tree::right_comb(n);
    fct::state_space(n).components();
    for (auto _ : state) {
        benchmark::DoNotOptimize(fct::find_admissible_path(l, r));
    }
}
BENCHMARK(BM_FindAdmissiblePath)->DenseRange(6, 9, 1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
