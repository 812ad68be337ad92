#include "slrsim/analytics.hpp"

#include <algorithm>

namespace slrsim {

std::optional<double> Ratio::percent() const {
    if (den == 0) return std::nullopt;
    return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

std::vector<SourcePerformanceRow> library_performance(const Corpus& corpus) {
    const std::set<PaperId> oracle = corpus.oracle();
    std::vector<SourcePerformanceRow> rows;
    rows.reserve(corpus.sources().size());
    for (const auto& [source, kind] : corpus.sources()) {
        (void)kind;
        std::size_t visited = 0;
        std::size_t hits = 0;
        for (const auto& [id, paper] : corpus.papers()) {
            if (paper.returned_by.count(source) == 0) continue;
            ++visited;
            if (oracle.count(id) > 0) ++hits;
        }
        rows.push_back({source, compute_metrics(hits, visited, oracle.size())});
    }
    return rows;
}

std::vector<IndexedRecallRow> indexed_recall(const Corpus& corpus) {
    const std::set<PaperId> oracle = corpus.oracle();
    std::vector<IndexedRecallRow> rows;
    rows.reserve(corpus.sources().size());
    for (const auto& [source, kind] : corpus.sources()) {
        (void)kind;
        IndexedRecallRow row;
        row.source = source;
        row.oracle_size = oracle.size();
        for (const PaperId& id : oracle) {
            const Paper& paper = corpus.paper(id);
            const auto it = paper.indexed_in.find(source);
            if (it == paper.indexed_in.end() || it->second == IndexEvidence::Unknown) {
                ++row.unknown;
            } else if (it->second == IndexEvidence::Yes) {
                ++row.indexed;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

OverlapMatrix overlap_matrix(const Corpus& corpus) {
    OverlapMatrix matrix;
    for (const auto& [source, kind] : corpus.sources()) {
        (void)kind;
        matrix.sources.push_back(source);
    }

    const std::set<PaperId> oracle = corpus.oracle();
    std::vector<std::set<PaperId>> selected_by(matrix.sources.size());
    for (std::size_t s = 0; s < matrix.sources.size(); ++s) {
        for (const PaperId& id : oracle) {
            if (corpus.paper(id).returned_by.count(matrix.sources[s]) > 0) {
                selected_by[s].insert(id);
            }
        }
    }

    matrix.contains.assign(matrix.sources.size(), {});
    matrix.unique.assign(matrix.sources.size(), Ratio{});
    for (std::size_t r = 0; r < matrix.sources.size(); ++r) {
        matrix.contains[r].assign(matrix.sources.size(), Ratio{});
        for (std::size_t c = 0; c < matrix.sources.size(); ++c) {
            if (r == c) continue;
            std::size_t common = 0;
            for (const PaperId& id : selected_by[c]) {
                if (selected_by[r].count(id) > 0) ++common;
            }
            matrix.contains[r][c] = {common, selected_by[c].size()};
        }
        std::size_t unique = 0;
        for (const PaperId& id : selected_by[r]) {
            bool elsewhere = false;
            for (std::size_t c = 0; c < matrix.sources.size() && !elsewhere; ++c) {
                elsewhere = c != r && selected_by[c].count(id) > 0;
            }
            if (!elsewhere) ++unique;
        }
        matrix.unique[r] = {unique, selected_by[r].size()};
    }
    return matrix;
}

std::vector<ComparisonRow> strategy_comparison(const Corpus& corpus,
                                               const std::vector<StrategySpec>& specs) {
    std::vector<ComparisonRow> rows;
    rows.reserve(specs.size());
    for (const StrategySpec& spec : specs) {
        const StrategyOutcome outcome = run_strategy(corpus, spec);
        rows.push_back({spec.name, outcome.final_metrics, outcome.iteration_cap_exceeded});
    }
    return rows;
}

}  // namespace slrsim
