#ifndef SLRSIM_INGEST_HPP
#define SLRSIM_INGEST_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "slrsim/bibtex.hpp"
#include "slrsim/corpus.hpp"

namespace slrsim {

struct ImportStats {
    std::size_t new_papers = 0;
    std::size_t merged_duplicates = 0;
    std::size_t stubs_created = 0;
    std::size_t edges_added = 0;

    bool operator==(const ImportStats&) const = default;
};

struct ImportOptions {
    /// Unknown citing papers in citer rows become stub papers.
    bool create_stubs = true;
    /// Citer keys that do not resolve to an id are treated as titles and go
    /// through regular registration instead of becoming stubs.
    bool resolve_titles = false;
};

/// Registers every entry of a reference list (deduplication applies) and adds
/// a citation edge from `citing` to each of them.
ImportStats import_references(Corpus& corpus, const PaperId& citing,
                              const std::vector<BibEntry>& entries);

/// Adds recorded (citing, cited) rows. The cited key must resolve to an
/// existing paper; unknown citing keys become stubs when enabled.
ImportStats import_citers(Corpus& corpus,
                          const std::vector<std::pair<std::string, std::string>>& rows,
                          const ImportOptions& options = {});

/// RFC-4180 CSV with the mandatory header `citing_id,cited_id`.
std::vector<std::pair<std::string, std::string>> parse_citers_csv(std::string_view text);

Corpus corpus_from_json(const nlohmann::json& json);
nlohmann::json corpus_to_json(const Corpus& corpus);

/// Reads a corpus file, rejecting anything that does not match the schema
/// with a JSON-pointer-style path.
Corpus load_corpus(const std::filesystem::path& path);

/// Writes the canonical form: sorted sources, papers and citations, optional
/// fields omitted when empty, two-space indentation, trailing newline.
/// load(save(c)) == c and save(load(f)) == f for canonical files.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace slrsim

#endif  // SLRSIM_INGEST_HPP
