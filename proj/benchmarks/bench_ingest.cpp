#include <benchmark/benchmark.h>

#include <string>

#include "slrsim/bibtex.hpp"
#include "slrsim/corpus.hpp"

using namespace slrsim;

namespace {

std::string synthetic_bib(int entries) {
    std::string text;
    for (int i = 0; i < entries; ++i) {
        text += "@article{key" + std::to_string(i) + ",\n";
        text += "  title = {Synthetic {Nested} Title Number " + std::to_string(i) + "},\n";
        text += "  author = \"A. Author and B. Author\",\n";
        text += "  year = " + std::to_string(1990 + i % 30) + ",\n";
        text += "  journal = {Journal of Benchmarks}\n";
        text += "}\n\n";
    }
    return text;
}

void BM_ParseBibtex(benchmark::State& state) {
    const std::string text = synthetic_bib(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto entries = parse_bibtex(text);
        benchmark::DoNotOptimize(entries.size());
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}

void BM_NormalizeTitle(benchmark::State& state) {
    const std::string title =
        "Towards a Systematic Überblick of Café-Driven Methodologies — die Größe matters!";
    for (auto _ : state) {
        auto normalized = normalize_title(title);
        benchmark::DoNotOptimize(normalized.size());
    }
}

void BM_RegisterWithDuplicates(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Corpus corpus;
        for (int i = 0; i < n; ++i) {
            Paper paper;
            // Every other record collides with an earlier title.
            paper.title = "Record " + std::to_string(i / 2);
            paper.year = 2000 + i % 5;
            benchmark::DoNotOptimize(corpus.register_paper(std::move(paper)).was_duplicate);
        }
    }
    state.SetItemsProcessed(state.iterations() * n);
}

}  // namespace

BENCHMARK(BM_ParseBibtex)->Arg(100)->Arg(1000);
BENCHMARK(BM_NormalizeTitle);
BENCHMARK(BM_RegisterWithDuplicates)->Arg(1000)->Arg(10000);
