#ifndef SLRSIM_ANALYTICS_HPP
#define SLRSIM_ANALYTICS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "slrsim/corpus.hpp"
#include "slrsim/metrics.hpp"
#include "slrsim/strategy.hpp"

namespace slrsim {

/// A fraction kept with its counts so reports can print "85.71 (6/7)".
/// A zero denominator means the percentage is undefined (NAN).
struct Ratio {
    std::size_t num = 0;
    std::size_t den = 0;

    bool nan() const noexcept { return den == 0; }
    std::optional<double> percent() const;

    bool operator==(const Ratio&) const = default;
};

/// Per-source precision/recall/F-measure: visited = papers the source
/// returned, hits = the selected ones among them.
struct SourcePerformanceRow {
    SourceName source;
    Metrics metrics;
};

std::vector<SourcePerformanceRow> library_performance(const Corpus& corpus);

/// Per-source potential recall: how many oracle papers the source indexes at
/// all (title lookup), regardless of what its query returned. Oracle papers
/// without lookup evidence count into the unknown column, never as indexed.
struct IndexedRecallRow {
    SourceName source;
    std::size_t indexed = 0;  // oracle papers with evidence "yes"
    std::size_t unknown = 0;  // oracle papers with evidence "unknown" or none
    std::size_t oracle_size = 0;
};

std::vector<IndexedRecallRow> indexed_recall(const Corpus& corpus);

/// Pairwise containment of per-source selected sets. Cell (r, c) is
/// |S_r ∩ S_c| / |S_c|; the diagonal reports how many of S_r no other source
/// returned.
struct OverlapMatrix {
    std::vector<SourceName> sources;          // row/column order
    std::vector<std::vector<Ratio>> contains;  // [row][col]; diagonal entries unused
    std::vector<Ratio> unique;                 // diagonal: unique_r / |S_r|
};

OverlapMatrix overlap_matrix(const Corpus& corpus);

struct ComparisonRow {
    std::string name;
    Metrics metrics;
    bool cap_exceeded = false;
};

/// Runs every spec and reports final metrics, preserving input order.
std::vector<ComparisonRow> strategy_comparison(const Corpus& corpus,
                                               const std::vector<StrategySpec>& specs);

}  // namespace slrsim

#endif  // SLRSIM_ANALYTICS_HPP
