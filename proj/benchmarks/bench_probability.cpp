#include <benchmark/benchmark.h>

#include "chromaprob/coloring_prob.hpp"
#include "chromaprob/graph.hpp"
#include "chromaprob/mono_tolerance.hpp"

using namespace chromaprob;

static void BM_ProfileTableCycle(benchmark::State& state) {
    Graph g = named_graph("cycle:" + std::to_string(state.range(0)));
    for (auto _ : state) {
        ProfileTable table = build_profile_table(g, 3);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_ProfileTableCycle)->DenseRange(10, 16, 2);

static void BM_PowerSumFormComplete(benchmark::State& state) {
    Graph g = named_graph("complete:" + std::to_string(state.range(0)));
    for (auto _ : state) {
        PowerSumPolynomial form = power_sum_form(g);
        benchmark::DoNotOptimize(form);
    }
}
BENCHMARK(BM_PowerSumFormComplete)->DenseRange(4, 7);

static void BM_JointTableTwoColors(benchmark::State& state) {
    Graph g = named_graph("figure1");
    int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MonoJointTable table = build_mono_joint_table(g, 2, kDefaultMaxStates, threads);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_JointTableTwoColors)->Arg(1)->Arg(4);

static void BM_BirthdayExact(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Rational prob = uniform_birthday_probability(n, 365);
        benchmark::DoNotOptimize(prob);
    }
}
BENCHMARK(BM_BirthdayExact)->Arg(23)->Arg(50)->Arg(100);
