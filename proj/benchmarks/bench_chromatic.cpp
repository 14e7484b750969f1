#include <benchmark/benchmark.h>

#include "chromaprob/chromatic.hpp"
#include "chromaprob/enumerate.hpp"
#include "chromaprob/graph.hpp"

using namespace chromaprob;

static void BM_ChromaticPolynomialRandom(benchmark::State& state) {
    Rng rng(4242);
    Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) {
        UnivariatePolynomial poly = chromatic_polynomial(g);
        benchmark::DoNotOptimize(poly);
    }
}
BENCHMARK(BM_ChromaticPolynomialRandom)->DenseRange(6, 10);

static void BM_ChromaticEvalBigPalette(benchmark::State& state) {
    Rng rng(4242);
    Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.5);
    Int q = Int("1000000000");
    for (auto _ : state) {
        Int count = chromatic_eval(g, q);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_ChromaticEvalBigPalette)->DenseRange(6, 10);

static void BM_SpanningTreeCount(benchmark::State& state) {
    Graph g = named_graph("complete:" + std::to_string(state.range(0)));
    for (auto _ : state) {
        Int trees = spanning_tree_count(g);
        benchmark::DoNotOptimize(trees);
    }
}
BENCHMARK(BM_SpanningTreeCount)->DenseRange(6, 12)->RangeMultiplier(2);

BENCHMARK_MAIN();
