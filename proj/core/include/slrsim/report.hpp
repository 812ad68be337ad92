#ifndef SLRSIM_REPORT_HPP
#define SLRSIM_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slrsim/analytics.hpp"
#include "slrsim/corpus.hpp"
#include "slrsim/strategy.hpp"

namespace slrsim::report {

enum class RenderFormat { Csv, Markdown, Json, Dot };

std::optional<RenderFormat> render_format_from_string(std::string_view text);

/// A percentage cell, optionally with the fraction behind it so text formats
/// can print "46.67 (7/15)". An absent percent renders as "NAN".
struct PercentCell {
    std::optional<double> percent;
    std::optional<Ratio> ratio;

    bool operator==(const PercentCell&) const = default;
};

using Cell = std::variant<std::string, std::int64_t, PercentCell>;

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Renders to RFC-4180 CSV (CRLF), a pipe table, or JSON. All renderers are
/// deterministic; numbers are rounded half-up to two decimals here and
/// nowhere else.
std::string render_table(const Table& table, RenderFormat format);

Table performance_table(const std::vector<SourcePerformanceRow>& rows);
Table indexed_recall_table(const std::vector<IndexedRecallRow>& rows);
Table overlap_table(const OverlapMatrix& matrix);
Table comparison_table(const std::vector<ComparisonRow>& rows);

/// DOT export of a strategy run. Nodes are the visited papers, classed as
/// seed-selected, snowball-selected, visited-unselected or stub. By default
/// only discovery edges appear (the edge that first reached each paper);
/// `all_edges` exports the full induced citation subgraph instead.
std::string render_citation_graph(const Corpus& corpus, const StrategyOutcome& outcome,
                                  bool all_edges = false);

/// Counts plus memberships of the backward/forward selected-set partition.
/// Supports Json and Markdown.
std::string render_venn(const Complementarity& result, RenderFormat format);

}  // namespace slrsim::report

#endif  // SLRSIM_REPORT_HPP
