// slrsim — simulate and analyze literature-search strategies over a recorded
// corpus of papers, sources and citations.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slrsim/analytics.hpp"
#include "slrsim/bibtex.hpp"
#include "slrsim/corpus.hpp"
#include "slrsim/ingest.hpp"
#include "slrsim/report.hpp"
#include "slrsim/spec_file.hpp"
#include "slrsim/strategy.hpp"

namespace {

using namespace slrsim;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

bool use_color() {
    return std::getenv("SLRSIM_NO_COLOR") == nullptr && isatty(fileno(stdout)) != 0;
}

void print_diagnostic(const Diagnostic& diag) {
    const char* label = diag.severity == Severity::Error ? "error" : "warning";
    if (use_color()) {
        const char* color = diag.severity == Severity::Error ? "\x1b[31m" : "\x1b[33m";
        std::cout << color << label << "\x1b[0m";
    } else {
        std::cout << label;
    }
    std::cout << " [" << diag.code << "]: " << diag.message << "\n";
}

Corpus load_validated_corpus(const std::string& path) {
    Corpus corpus = load_corpus(path);
    bool any_error = false;
    for (const Diagnostic& diag : corpus.validate()) {
        if (diag.severity == Severity::Error) {
            any_error = true;
            print_diagnostic(diag);
        }
    }
    if (any_error) throw DomainError("corpus " + path + " failed validation");
    return corpus;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(out_path, content);
    }
}

report::RenderFormat parse_format(const std::string& text) {
    const auto format = report::render_format_from_string(text);
    if (!format.has_value()) {
        throw DomainError("unknown format '" + text + "'; expected csv, markdown or json");
    }
    return *format;
}

// Inline strategy flags shared by simulate, graph and complementarity.
struct StrategyFlags {
    std::vector<std::string> db_sources;
    std::string seed_source;
    int seed_cap = kDefaultSeedCap;
    std::vector<std::string> seed_ids;
    std::string mode = "none";
    int max_iterations = kDefaultMaxIterations;
    std::string spec_path;
    std::string spec_name;
};

void add_seed_flags(CLI::App* cmd, StrategyFlags& flags) {
    cmd->add_option("--db-sources", flags.db_sources,
                    "Sources whose query hits seed the run (from-db-selected seed)")
        ->delimiter(',');
    cmd->add_option("--seed-source", flags.seed_source,
                    "Seed from the top-ranked results of this source");
    cmd->add_option("--seed-cap", flags.seed_cap, "Rank cutoff for --seed-source")
        ->capture_default_str();
    cmd->add_option("--seed-ids", flags.seed_ids, "Explicit paper ids forming the seed")
        ->delimiter(',');
}

void add_strategy_flags(CLI::App* cmd, StrategyFlags& flags) {
    add_seed_flags(cmd, flags);
    cmd->add_option("--mode", flags.mode, "Snowballing mode")->capture_default_str();
    cmd->add_option("--max-iterations", flags.max_iterations, "Iteration safety cap")
        ->capture_default_str();
    cmd->add_option("--spec", flags.spec_path, "Strategies file to pick a spec from");
    cmd->add_option("--name", flags.spec_name, "Strategy name inside --spec");
}

StrategySpec spec_from_flags(const StrategyFlags& flags) {
    if (!flags.spec_path.empty() || !flags.spec_name.empty()) {
        if (flags.spec_path.empty() || flags.spec_name.empty()) {
            throw DomainError("--spec and --name must be used together");
        }
        const SpecFile file = load_spec_file(flags.spec_path);
        for (const StrategySpec& spec : file.strategies) {
            if (spec.name == flags.spec_name) return spec;
        }
        throw DomainError("no strategy named '" + flags.spec_name + "' in " + flags.spec_path);
    }

    StrategySpec spec;
    spec.name = "cli";
    spec.db_sources.insert(flags.db_sources.begin(), flags.db_sources.end());
    const auto mode = snowball_mode_from_string(flags.mode);
    if (!mode.has_value()) {
        std::string valid;
        for (const auto& name : snowball_mode_names()) {
            if (!valid.empty()) valid += ", ";
            valid += name;
        }
        throw DomainError("unknown mode '" + flags.mode + "'; valid modes: " + valid);
    }
    spec.mode = *mode;
    spec.max_iterations = flags.max_iterations;

    if (!flags.seed_ids.empty()) {
        spec.seed = SeedExplicitList{flags.seed_ids};
    } else if (!flags.seed_source.empty()) {
        spec.seed = SeedRankedSource{flags.seed_source, flags.seed_cap};
    } else if (!spec.db_sources.empty()) {
        spec.seed = SeedFromDbSelected{};
    } else {
        spec.seed = SeedExplicitList{};
    }
    return spec;
}

std::string metrics_line(const StrategyOutcome& outcome) {
    const Metrics& m = outcome.final_metrics;
    return "P=" + format_percent(m.precision) + " R=" + format_percent(m.recall) +
           " F=" + format_percent(m.f_measure) + " visited=" + std::to_string(m.visited) +
           " selected=" + std::to_string(m.hits) + "\n";
}

int cmd_validate(const std::string& corpus_path) {
    const Corpus corpus = load_corpus(corpus_path);
    const std::vector<Diagnostic> diags = corpus.validate();
    bool any_error = false;
    for (const Diagnostic& diag : diags) {
        print_diagnostic(diag);
        any_error = any_error || diag.severity == Severity::Error;
    }
    return any_error ? kExitDomain : kExitOk;
}

int cmd_simulate(const std::string& corpus_path, const StrategyFlags& flags,
                 const std::string& out_path) {
    const Corpus corpus = load_validated_corpus(corpus_path);
    const StrategySpec spec = spec_from_flags(flags);
    check_spec_against_corpus(spec, corpus);
    const StrategyOutcome outcome = run_strategy(corpus, spec);
    if (outcome.iteration_cap_exceeded) {
        std::cerr << "warning: iteration cap reached before the run converged\n";
    }
    if (!out_path.empty()) {
        write_text_file(out_path, trace_to_json(outcome.trace).dump(2) + "\n");
    }
    std::cout << metrics_line(outcome);
    return kExitOk;
}

int cmd_compare(const std::string& corpus_path, const std::string& spec_path,
                const std::string& format, const std::string& out_path) {
    const Corpus corpus = load_validated_corpus(corpus_path);
    const SpecFile file = load_spec_file(spec_path);
    // All-or-nothing: reject the whole file before running anything.
    for (const StrategySpec& spec : file.strategies) {
        check_spec_against_corpus(spec, corpus);
    }
    const auto rows = strategy_comparison(corpus, file.strategies);
    emit(report::render_table(report::comparison_table(rows), parse_format(format)), out_path);
    return kExitOk;
}

int cmd_libraries(const std::string& corpus_path, const std::string& format,
                  const std::string& out_path) {
    const Corpus corpus = load_validated_corpus(corpus_path);
    emit(report::render_table(report::performance_table(library_performance(corpus)),
                              parse_format(format)),
         out_path);
    return kExitOk;
}

int cmd_indexed(const std::string& corpus_path, const std::string& format,
                const std::string& out_path) {
    const Corpus corpus = load_validated_corpus(corpus_path);
    emit(report::render_table(report::indexed_recall_table(indexed_recall(corpus)),
                              parse_format(format)),
         out_path);
    return kExitOk;
}

int cmd_matrix(const std::string& corpus_path, const std::string& format,
               const std::string& out_path) {
    const Corpus corpus = load_validated_corpus(corpus_path);
    emit(report::render_table(report::overlap_table(overlap_matrix(corpus)),
                              parse_format(format)),
         out_path);
    return kExitOk;
}

int cmd_complementarity(const std::string& corpus_path, StrategyFlags flags,
                        const std::string& format, const std::string& out_path) {
    const Corpus corpus = load_validated_corpus(corpus_path);
    if (flags.db_sources.empty() && flags.seed_source.empty() && flags.seed_ids.empty()) {
        // Default seed: the selected papers of a search over every source.
        for (const auto& [name, kind] : corpus.sources()) {
            (void)kind;
            flags.db_sources.push_back(name);
        }
    }
    StrategySpec spec = spec_from_flags(flags);
    spec.mode = SnowballMode::None;
    check_spec_against_corpus(spec, corpus);
    const StrategyOutcome seed = run_strategy(corpus, spec);
    const Complementarity result = complementarity(corpus, seed.selected, seed.visited);
    emit(report::render_venn(result, parse_format(format)), out_path);
    return kExitOk;
}

int cmd_graph(const std::string& corpus_path, const StrategyFlags& flags, bool all_edges,
              const std::string& out_path) {
    const Corpus corpus = load_validated_corpus(corpus_path);
    const StrategySpec spec = spec_from_flags(flags);
    check_spec_against_corpus(spec, corpus);
    const StrategyOutcome outcome = run_strategy(corpus, spec);
    emit(report::render_citation_graph(corpus, outcome, all_edges), out_path);
    return kExitOk;
}

int cmd_presets(const std::string& corpus_path, const std::string& db_source,
                const std::string& ranked_source, int cap, const std::string& out_path) {
    const Corpus corpus = load_corpus(corpus_path);
    const SpecFile file = preset_strategies(corpus, db_source, ranked_source, cap);
    emit(spec_file_to_json(file).dump(2) + "\n", out_path);
    return kExitOk;
}

void write_updated_corpus(const Corpus& corpus, const std::string& corpus_path,
                          const std::string& out_path, bool in_place) {
    if (in_place) {
        save_corpus(corpus, corpus_path);
    } else {
        save_corpus(corpus, out_path);
    }
}

std::string stats_line(const ImportStats& stats) {
    return "new=" + std::to_string(stats.new_papers) +
           " merged=" + std::to_string(stats.merged_duplicates) +
           " stubs=" + std::to_string(stats.stubs_created) +
           " edges=" + std::to_string(stats.edges_added) + "\n";
}

int cmd_ingest_bibtex(const std::string& corpus_path, const std::vector<std::string>& bib_paths,
                      const std::string& citing, const std::string& out_path, bool in_place) {
    if (out_path.empty() && !in_place) throw DomainError("--out or --in-place is required");
    Corpus corpus = load_corpus(corpus_path);
    ImportStats total;
    for (const std::string& bib_path : bib_paths) {
        const auto entries = parse_bibtex(read_text_file(bib_path));
        const ImportStats stats = import_references(corpus, citing, entries);
        total.new_papers += stats.new_papers;
        total.merged_duplicates += stats.merged_duplicates;
        total.edges_added += stats.edges_added;
    }
    write_updated_corpus(corpus, corpus_path, out_path, in_place);
    std::cout << stats_line(total);
    return kExitOk;
}

int cmd_ingest_citers(const std::string& corpus_path, const std::string& csv_path,
                      const ImportOptions& options, const std::string& out_path, bool in_place) {
    if (out_path.empty() && !in_place) throw DomainError("--out or --in-place is required");
    Corpus corpus = load_corpus(corpus_path);
    const auto rows = parse_citers_csv(read_text_file(csv_path));
    const ImportStats stats = import_citers(corpus, rows, options);
    write_updated_corpus(corpus, corpus_path, out_path, in_place);
    std::cout << stats_line(stats);
    return kExitOk;
}

int cmd_ingest_corpus(const std::string& corpus_path, const std::string& out_path,
                      bool in_place) {
    const Corpus corpus = load_corpus(corpus_path);
    if (in_place || !out_path.empty()) {
        write_updated_corpus(corpus, corpus_path, out_path, in_place);
    } else {
        std::cout << corpus_to_json(corpus).dump(2) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search-strategy simulator for recorded literature-review corpora"};
    app.require_subcommand(1);

    std::string corpus_path;
    std::string out_path;
    std::string format = "markdown";
    StrategyFlags flags;

    auto* validate = app.add_subcommand("validate", "Check a corpus file for consistency");
    validate->add_option("corpus", corpus_path, "Corpus JSON file")->required();

    auto* simulate = app.add_subcommand("simulate", "Run one strategy and print its metrics");
    simulate->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    add_strategy_flags(simulate, flags);
    simulate->add_option("--out", out_path, "Write the iteration trace JSON here");

    std::string spec_path;
    auto* compare = app.add_subcommand("compare", "Run every strategy of a strategies file");
    compare->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    compare->add_option("specs", spec_path, "Strategies JSON file")->required();
    compare->add_option("--format", format, "csv, markdown or json")->capture_default_str();
    compare->add_option("--out", out_path, "Write the table here instead of stdout");

    auto* libraries = app.add_subcommand("libraries", "Per-source precision/recall/F-measure");
    libraries->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    libraries->add_option("--format", format, "csv, markdown or json")->capture_default_str();
    libraries->add_option("--out", out_path, "Write the table here instead of stdout");

    auto* indexed = app.add_subcommand("indexed", "Per-source recall of indexed papers");
    indexed->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    indexed->add_option("--format", format, "csv, markdown or json")->capture_default_str();
    indexed->add_option("--out", out_path, "Write the table here instead of stdout");

    auto* matrix = app.add_subcommand("matrix", "Pairwise overlap of per-source selected sets");
    matrix->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    matrix->add_option("--format", format, "csv, markdown or json")->capture_default_str();
    matrix->add_option("--out", out_path, "Write the table here instead of stdout");

    std::string venn_format = "json";
    auto* comp = app.add_subcommand("complementarity",
                                    "Contrast independent backward and forward snowballing");
    comp->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    add_seed_flags(comp, flags);
    comp->add_option("--format", venn_format, "json or markdown")->capture_default_str();
    comp->add_option("--out", out_path, "Write the result here instead of stdout");

    bool all_edges = false;
    auto* graph = app.add_subcommand("graph", "Export a strategy run as a DOT citation graph");
    graph->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    add_strategy_flags(graph, flags);
    graph->add_flag("--all-edges", all_edges,
                    "Export the induced citation subgraph, not just discovery edges");
    graph->add_option("--out", out_path, "Write the DOT text here instead of stdout");

    std::string db_source = "Scopus";
    std::string ranked_source = "Google Scholar";
    int cap = kDefaultSeedCap;
    auto* presets = app.add_subcommand("presets", "Write the seven standard strategies "
                                                  "expanded against a corpus");
    presets->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    presets->add_option("--db-source", db_source, "Library for the single-source strategies")
        ->capture_default_str();
    presets->add_option("--ranked-source", ranked_source, "Engine seeding the sb strategy")
        ->capture_default_str();
    presets->add_option("--cap", cap, "Rank cutoff for the sb strategy")->capture_default_str();
    presets->add_option("--out", out_path, "Write the strategies file here instead of stdout");

    auto* ingest = app.add_subcommand("ingest", "Import data into a corpus");
    ingest->require_subcommand(1);

    std::vector<std::string> bib_paths;
    std::string citing;
    bool in_place = false;
    auto* ingest_bibtex = ingest->add_subcommand("bibtex", "Import a reference list");
    ingest_bibtex->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    ingest_bibtex->add_option("bib", bib_paths, "BibTeX files")->required();
    ingest_bibtex->add_option("--citing", citing, "Paper whose references these are")->required();
    auto* bib_out = ingest_bibtex->add_option("--out", out_path, "Write the updated corpus here");
    auto* bib_inplace =
        ingest_bibtex->add_flag("--in-place", in_place, "Overwrite the input corpus");
    bib_out->excludes(bib_inplace);

    std::string csv_path;
    ImportOptions import_options;
    bool no_stubs = false;
    auto* ingest_citers = ingest->add_subcommand("citers", "Import recorded citing/cited rows");
    ingest_citers->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    ingest_citers->add_option("csv", csv_path, "CSV file with header citing_id,cited_id")
        ->required();
    ingest_citers->add_flag("--resolve-titles", import_options.resolve_titles,
                            "Treat unresolved keys as titles and register them");
    ingest_citers->add_flag("--no-stubs", no_stubs,
                            "Fail on unknown citing papers instead of creating stubs");
    auto* citers_out =
        ingest_citers->add_option("--out", out_path, "Write the updated corpus here");
    auto* citers_inplace =
        ingest_citers->add_flag("--in-place", in_place, "Overwrite the input corpus");
    citers_out->excludes(citers_inplace);

    auto* ingest_corpus = ingest->add_subcommand("corpus", "Re-emit a corpus in canonical form");
    ingest_corpus->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    ingest_corpus->add_option("--out", out_path, "Write the canonical corpus here");
    ingest_corpus->add_flag("--in-place", in_place, "Overwrite the input corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitDomain;
    }

    try {
        if (validate->parsed()) return cmd_validate(corpus_path);
        if (simulate->parsed()) return cmd_simulate(corpus_path, flags, out_path);
        if (compare->parsed()) return cmd_compare(corpus_path, spec_path, format, out_path);
        if (libraries->parsed()) return cmd_libraries(corpus_path, format, out_path);
        if (indexed->parsed()) return cmd_indexed(corpus_path, format, out_path);
        if (matrix->parsed()) return cmd_matrix(corpus_path, format, out_path);
        if (comp->parsed()) return cmd_complementarity(corpus_path, flags, venn_format, out_path);
        if (graph->parsed()) return cmd_graph(corpus_path, flags, all_edges, out_path);
        if (presets->parsed()) {
            return cmd_presets(corpus_path, db_source, ranked_source, cap, out_path);
        }
        if (ingest->parsed()) {
            import_options.create_stubs = !no_stubs;
            if (ingest_bibtex->parsed()) {
                return cmd_ingest_bibtex(corpus_path, bib_paths, citing, out_path, in_place);
            }
            if (ingest_citers->parsed()) {
                return cmd_ingest_citers(corpus_path, csv_path, import_options, out_path,
                                         in_place);
            }
            if (ingest_corpus->parsed()) {
                return cmd_ingest_corpus(corpus_path, out_path, in_place);
            }
        }
    } catch (const DomainError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitDomain;
    } catch (const InputError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
