#include "slrsim/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "slrsim/metrics.hpp"

namespace slrsim::report {

using nlohmann::json;

std::optional<RenderFormat> render_format_from_string(std::string_view text) {
    if (text == "csv") return RenderFormat::Csv;
    if (text == "markdown") return RenderFormat::Markdown;
    if (text == "json") return RenderFormat::Json;
    if (text == "dot") return RenderFormat::Dot;
    return std::nullopt;
}

namespace {

std::string percent_text(const PercentCell& cell) {
    std::string out = format_percent(cell.percent);
    if (cell.ratio.has_value()) {
        out += " (" + std::to_string(cell.ratio->num) + "/" + std::to_string(cell.ratio->den) + ")";
    }
    return out;
}

std::string cell_text(const Cell& cell) {
    if (const auto* text = std::get_if<std::string>(&cell)) return *text;
    if (const auto* number = std::get_if<std::int64_t>(&cell)) return std::to_string(*number);
    return percent_text(std::get<PercentCell>(cell));
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string render_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out += ",";
        out += csv_escape(table.columns[c]);
    }
    out += "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ",";
            out += csv_escape(cell_text(row[c]));
        }
        out += "\r\n";
    }
    return out;
}

std::string markdown_escape(const std::string& field) {
    std::string out;
    for (const char c : field) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

std::string render_markdown(const Table& table) {
    std::string out;
    if (!table.title.empty()) out += "### " + table.title + "\n\n";
    out += "|";
    for (const auto& column : table.columns) out += " " + markdown_escape(column) + " |";
    out += "\n|";
    for (std::size_t c = 0; c < table.columns.size(); ++c) out += " --- |";
    out += "\n";
    for (const auto& row : table.rows) {
        out += "|";
        for (const auto& cell : row) out += " " + markdown_escape(cell_text(cell)) + " |";
        out += "\n";
    }
    return out;
}

json cell_json(const Cell& cell) {
    if (const auto* text = std::get_if<std::string>(&cell)) return *text;
    if (const auto* number = std::get_if<std::int64_t>(&cell)) return *number;
    const auto& percent = std::get<PercentCell>(cell);
    json j;
    j["percent"] = percent.percent.has_value() ? json(round_half_up2(*percent.percent))
                                               : json(nullptr);
    j["nan"] = !percent.percent.has_value();
    if (percent.ratio.has_value()) {
        j["num"] = percent.ratio->num;
        j["den"] = percent.ratio->den;
    }
    return j;
}

std::string render_json(const Table& table) {
    json j;
    j["title"] = table.title;
    j["columns"] = table.columns;
    json rows = json::array();
    for (const auto& row : table.rows) {
        json cells = json::array();
        for (const auto& cell : row) cells.push_back(cell_json(cell));
        rows.push_back(std::move(cells));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

PercentCell metric_precision_cell(const Metrics& m) {
    return {m.precision, Ratio{m.hits, m.visited}};
}

PercentCell metric_recall_cell(const Metrics& m) {
    return {m.recall, Ratio{m.hits, m.oracle_size}};
}

PercentCell metric_f_cell(const Metrics& m) {
    return {m.f_measure, std::nullopt};
}

}  // namespace

std::string render_table(const Table& table, RenderFormat format) {
    switch (format) {
        case RenderFormat::Csv: return render_csv(table);
        case RenderFormat::Markdown: return render_markdown(table);
        case RenderFormat::Json: return render_json(table);
        case RenderFormat::Dot: break;
    }
    throw UnsupportedFormatError("tables cannot be rendered as dot");
}

Table performance_table(const std::vector<SourcePerformanceRow>& rows) {
    Table table;
    table.title = "Performance of sources";
    table.columns = {"Source", "Precision", "Recall", "F-measure"};
    for (const auto& row : rows) {
        table.rows.push_back({row.source, metric_precision_cell(row.metrics),
                              metric_recall_cell(row.metrics), metric_f_cell(row.metrics)});
    }
    return table;
}

Table indexed_recall_table(const std::vector<IndexedRecallRow>& rows) {
    Table table;
    table.title = "Recall of indexed papers";
    table.columns = {"Source", "Indexed recall", "Unknown"};
    for (const auto& row : rows) {
        const Ratio ratio{row.indexed, row.oracle_size};
        table.rows.push_back({row.source, PercentCell{ratio.percent(), ratio},
                              static_cast<std::int64_t>(row.unknown)});
    }
    return table;
}

Table overlap_table(const OverlapMatrix& matrix) {
    Table table;
    table.title = "Row contains column (diagonal: unique papers)";
    table.columns.push_back("Source");
    for (const auto& source : matrix.sources) table.columns.push_back(source);
    for (std::size_t r = 0; r < matrix.sources.size(); ++r) {
        std::vector<Cell> row;
        row.emplace_back(matrix.sources[r]);
        for (std::size_t c = 0; c < matrix.sources.size(); ++c) {
            if (r == c) {
                row.emplace_back(std::to_string(matrix.unique[r].num) + "/" +
                                 std::to_string(matrix.unique[r].den));
            } else {
                const Ratio& cell = matrix.contains[r][c];
                row.emplace_back(PercentCell{cell.percent(), cell});
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table comparison_table(const std::vector<ComparisonRow>& rows) {
    Table table;
    table.title = "Performance of strategies";
    table.columns = {"Strategy", "Precision", "Recall", "F-measure", "Visited", "Selected"};
    for (const auto& row : rows) {
        std::string name = row.name;
        if (row.cap_exceeded) name += " (iteration cap hit)";
        table.rows.push_back({name, metric_precision_cell(row.metrics),
                              metric_recall_cell(row.metrics), metric_f_cell(row.metrics),
                              static_cast<std::int64_t>(row.metrics.visited),
                              static_cast<std::int64_t>(row.metrics.hits)});
    }
    return table;
}

namespace {

std::string dot_quote(const std::string& id) {
    std::string out = "\"";
    for (const char c : id) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

struct NodeStyle {
    const char* cls;
    const char* fill;
    const char* extra;
};

}  // namespace

std::string render_citation_graph(const Corpus& corpus, const StrategyOutcome& outcome,
                                  bool all_edges) {
    const std::set<PaperId> seed_selected =
        outcome.trace.empty() ? std::set<PaperId>{} : outcome.trace.front().new_selected;

    std::ostringstream out;
    out << "digraph strategy {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, style=filled];\n";
    for (const PaperId& id : outcome.visited) {
        const Paper* paper = corpus.find_paper(id);
        NodeStyle style{"visited-unselected", "#eeeeee", ""};
        if (paper != nullptr && paper->stub) {
            style = {"stub", "#ffffff", ", style=\"filled,dashed\""};
        } else if (seed_selected.count(id) > 0) {
            style = {"seed-selected", "#1b9e77", ""};
        } else if (outcome.selected.count(id) > 0) {
            style = {"snowball-selected", "#7570b3", ""};
        }
        out << "  " << dot_quote(id) << " [class=\"" << style.cls << "\", fillcolor=\""
            << style.fill << "\"" << style.extra << "];\n";
    }

    std::set<std::pair<PaperId, PaperId>> edges;
    if (all_edges) {
        for (const auto& edge : corpus.graph().edges()) {
            if (outcome.visited.count(edge.first) > 0 && outcome.visited.count(edge.second) > 0) {
                edges.insert(edge);
            }
        }
    } else {
        edges.insert(outcome.traversal_edges.begin(), outcome.traversal_edges.end());
    }
    for (const auto& [citing, cited] : edges) {
        out << "  " << dot_quote(citing) << " -> " << dot_quote(cited) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_venn(const Complementarity& result, RenderFormat format) {
    if (format == RenderFormat::Json) {
        json j;
        j["bs_only"] = {{"count", result.bs_only.size()}, {"ids", result.bs_only}};
        j["overlap"] = {{"count", result.overlap.size()}, {"ids", result.overlap}};
        j["fs_only"] = {{"count", result.fs_only.size()}, {"ids", result.fs_only}};
        j["bs_selected_total"] = result.bs_selected.size();
        j["fs_selected_total"] = result.fs_selected.size();
        return j.dump(2) + "\n";
    }
    if (format != RenderFormat::Markdown) {
        throw UnsupportedFormatError("complementarity supports json and markdown only");
    }

    const auto id_list = [](const std::set<PaperId>& ids) {
        std::string out;
        for (const PaperId& id : ids) {
            if (!out.empty()) out += ", ";
            out += id;
        }
        return out;
    };
    Table table;
    table.title = "Backward vs. forward snowballing";
    table.columns = {"Region", "Count", "Papers"};
    table.rows.push_back({std::string("backward only"),
                          static_cast<std::int64_t>(result.bs_only.size()),
                          id_list(result.bs_only)});
    table.rows.push_back({std::string("overlap"),
                          static_cast<std::int64_t>(result.overlap.size()),
                          id_list(result.overlap)});
    table.rows.push_back({std::string("forward only"),
                          static_cast<std::int64_t>(result.fs_only.size()),
                          id_list(result.fs_only)});
    return render_markdown(table);
}

}  // namespace slrsim::report
