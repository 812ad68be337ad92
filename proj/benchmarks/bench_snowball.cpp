#include <benchmark/benchmark.h>

#include "slrsim/strategy.hpp"

using namespace slrsim;

namespace {

// A layered citation graph: `layers` levels of `width` papers, every paper
// citing the whole previous layer. All papers selected, seeded at layer zero,
// so closures walk the full depth.
Corpus layered_corpus(int layers, int width) {
    Corpus corpus;
    corpus.add_source({"S", SourceKind::IndexDatabase});
    const auto id_of = [](int layer, int slot) {
        return "p" + std::to_string(layer) + "_" + std::to_string(slot);
    };
    for (int layer = 0; layer < layers; ++layer) {
        for (int slot = 0; slot < width; ++slot) {
            Paper paper;
            paper.id = id_of(layer, slot);
            paper.title = "Paper " + paper.id;
            paper.selected = true;
            if (layer == 0) paper.returned_by = {"S"};
            corpus.insert_paper_exact(std::move(paper));
        }
    }
    for (int layer = 1; layer < layers; ++layer) {
        for (int slot = 0; slot < width; ++slot) {
            for (int prev = 0; prev < width; ++prev) {
                corpus.graph().add_edge(id_of(layer - 1, prev), id_of(layer, slot));
            }
        }
    }
    return corpus;
}

void BM_SnowballIterative(benchmark::State& state) {
    const Corpus corpus = layered_corpus(static_cast<int>(state.range(0)), 8);
    std::set<PaperId> seed;
    for (int slot = 0; slot < 8; ++slot) seed.insert("p0_" + std::to_string(slot));
    for (auto _ : state) {
        auto result = snowball(corpus, seed, seed, SnowballMode::Iterative, 1000);
        benchmark::DoNotOptimize(result.visited.size());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(corpus.papers().size()));
}

void BM_SnowballParallel(benchmark::State& state) {
    const Corpus corpus = layered_corpus(static_cast<int>(state.range(0)), 8);
    std::set<PaperId> seed;
    for (int slot = 0; slot < 8; ++slot) seed.insert("p0_" + std::to_string(slot));
    for (auto _ : state) {
        auto result = snowball(corpus, seed, seed, SnowballMode::Parallel, 1000);
        benchmark::DoNotOptimize(result.visited.size());
    }
}

void BM_RunStrategyWithTrace(benchmark::State& state) {
    const Corpus corpus = layered_corpus(static_cast<int>(state.range(0)), 8);
    StrategySpec spec;
    spec.db_sources = {"S"};
    spec.seed = SeedFromDbSelected{};
    spec.mode = SnowballMode::Iterative;
    spec.max_iterations = 1000;
    for (auto _ : state) {
        auto outcome = run_strategy(corpus, spec);
        benchmark::DoNotOptimize(outcome.trace.size());
    }
}

}  // namespace

BENCHMARK(BM_SnowballIterative)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_SnowballParallel)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_RunStrategyWithTrace)->Arg(32);

BENCHMARK_MAIN();
