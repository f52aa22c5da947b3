#include "fixtures.hpp"

#include "vcsp/classify.hpp"
#include "vcsp/closure.hpp"
#include "vcsp/solver.hpp"

#include <benchmark/benchmark.h>

using namespace vcsp;
using namespace vcsp::testing;

namespace {

Language random_binary_language(int d, std::uint64_t seed) {
    Gen g(seed);
    return Language(d, {g.function(d, 2, 25, 4), g.crisp(d, 2, 40)}, UnaryClosure::Finite);
}

void BM_BinaryClosure(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int rounds = static_cast<int>(state.range(1));
    Language lang = random_binary_language(d, 17);
    std::size_t members = 0;
    for (auto _ : state) {
        BinaryClosure c = binary_closure(lang, ClosureBudget{rounds, 512, 32});
        members = c.members.size();
        benchmark::DoNotOptimize(members);
    }
    state.counters["members"] = static_cast<double>(members);
}
BENCHMARK(BM_BinaryClosure)->Args({2, 3})->Args({3, 1})->Args({3, 3})->Args({4, 1});

void BM_Classify(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        Verdict v = classify(random_binary_language(d, ++seed % 64));
        benchmark::DoNotOptimize(v.kind);
    }
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(3);

void BM_ClassifyExamples(benchmark::State& state) {
    const std::vector<Language> langs{submodular_lang(), cut_lang(), disequality_lang(), parity_lang()};
    const Language& lang = langs[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) benchmark::DoNotOptimize(classify(lang).kind);
}
BENCHMARK(BM_ClassifyExamples)->DenseRange(0, 3);

void BM_BruteForce(benchmark::State& state) {
    const int vars = static_cast<int>(state.range(0));
    const unsigned jobs = static_cast<unsigned>(state.range(1));
    Gen g(5);
    Language lang(3, {g.function(3, 2, 20, 9), g.function(3, 1, 0, 9)});
    Instance inst = g.instance(lang, vars, 2 * vars);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve(inst, lang, jobs).cost);
}
BENCHMARK(BM_BruteForce)->Args({8, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
