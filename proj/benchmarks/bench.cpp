#include <benchmark/benchmark.h>

#include <random>

#include "coxfano/classify.hpp"
#include "coxfano/tdiv.hpp"

using namespace coxfano;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(-9, 9);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<IntMatrix> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(random_matrix(static_cast<std::size_t>(state.range(0)),
                                       static_cast<std::size_t>(state.range(0)) + 2, rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(inputs[i++ % inputs.size()]));
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8);

void BM_EnumerateSurfaces(benchmark::State& state) {
    ClassificationQuery q;
    q.dimension = 2;
    for (long mu = 1; mu <= state.range(0); ++mu) q.picard_indices.insert(mu);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(q));
}
BENCHMARK(BM_EnumerateSurfaces)->Arg(6)->Arg(12);

void BM_EnumerateThreefoldsMu2(benchmark::State& state) {
    ClassificationQuery q;
    q.dimension = 3;
    q.picard_indices = {1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(q));
}
BENCHMARK(BM_EnumerateThreefoldsMu2);

void BM_EnumerateFourfoldsMu1(benchmark::State& state) {
    ClassificationQuery q;
    q.dimension = 4;
    q.picard_indices = {1};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(q));
}
BENCHMARK(BM_EnumerateFourfoldsMu1);

void BM_SolveDiscrepancies(benchmark::State& state) {
    RefinementData fan;
    fan.rank = 2;
    fan.tail = {{Int(1), Int(2)}, {Int(1), Int(0)}};
    fan.marked = {"0", "1", "inf"};
    fan.slices["0"] = {{{Rat(3, 5), Rat(1, 5)}, false}};
    fan.slices["1"] = {{{Rat(0), Rat(0)}, false}, {{Rat(0), Rat(-1, 5)}, false}};
    fan.slices["inf"] = {{{Rat(-1, 2), Rat(0)}, false}, {{Rat(0), Rat(0)}, true}};
    fan.rays = {{{Int(3), Int(1)}, false}, {{Int(1), Int(0)}, true}};
    for (auto _ : state) benchmark::DoNotOptimize(solve_discrepancies(fan));
}
BENCHMARK(BM_SolveDiscrepancies);

void BM_DeltaBound(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(delta_bound(4, state.range(0)));
}
BENCHMARK(BM_DeltaBound)->Arg(2)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
