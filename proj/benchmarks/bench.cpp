#include <benchmark/benchmark.h>

#include "wgd/coloring.hpp"
#include "wgd/milnor.hpp"
#include "wgd/normalize.hpp"
#include "wgd/reduced.hpp"

using namespace wgd;

namespace {

GaussDiagram corpus_diagram(int n, int arrows, std::uint64_t seed) {
    return random_diagram(n, arrows, seed);
}

void BM_ReducedMagnus(benchmark::State& state) {
    Rng rng(1);
    std::vector<Word> words;
    for (int i = 0; i < 64; ++i) {
        std::vector<int> ls;
        for (int k = 0; k < state.range(0); ++k)
            ls.push_back(rng.pick_sign() * (1 + static_cast<int>(rng.below(4))));
        words.push_back(Word::from_letters(4, ls));
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduced_magnus(words[i++ % words.size()]));
    }
}
BENCHMARK(BM_ReducedMagnus)->Arg(16)->Arg(64)->Arg(256);

void BM_PhiGtoA(benchmark::State& state) {
    GaussDiagram g = corpus_diagram(4, static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(phi_g_to_a(g));
}
BENCHMARK(BM_PhiGtoA)->Arg(4)->Arg(8)->Arg(16);

void BM_AscendingForm(benchmark::State& state) {
    GaussDiagram g = corpus_diagram(4, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(ascending_form(g));
}
BENCHMARK(BM_AscendingForm)->Arg(4)->Arg(8);

void BM_HorizontalForm(benchmark::State& state) {
    GaussDiagram g = corpus_diagram(4, static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(horizontal_form(g));
}
BENCHMARK(BM_HorizontalForm)->Arg(4)->Arg(8);

void BM_UniversalMilnor(benchmark::State& state) {
    GaussDiagram g = corpus_diagram(4, 8, 99);
    for (auto _ : state)
        benchmark::DoNotOptimize(universal_milnor(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UniversalMilnor)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
