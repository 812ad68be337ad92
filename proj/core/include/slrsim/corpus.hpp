#ifndef SLRSIM_CORPUS_HPP
#define SLRSIM_CORPUS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slrsim/errors.hpp"

namespace slrsim {

using PaperId = std::string;
using SourceName = std::string;

enum class SourceKind {
    PublisherLibrary,  // stores the papers themselves (ACM, ScienceDirect, ...)
    IndexDatabase,     // stores references to papers held elsewhere (Scopus, ...)
    SearchEngine,      // general-purpose engine (Google Scholar)
};

std::string to_string(SourceKind kind);
std::optional<SourceKind> source_kind_from_string(std::string_view text);

struct Source {
    SourceName name;
    SourceKind kind = SourceKind::PublisherLibrary;

    bool operator==(const Source&) const = default;
};

/// Title-lookup evidence: was the paper found when its exact title was
/// searched in a source? Absence of an entry means the lookup was never done,
/// which is not the same as No.
enum class IndexEvidence { Yes, No, Unknown };

std::string to_string(IndexEvidence evidence);
std::optional<IndexEvidence> index_evidence_from_string(std::string_view text);

/// One deduplicated study. Stub papers are known only as citation endpoints:
/// they are never selected and never returned by a source query.
struct Paper {
    PaperId id;
    std::string title;
    std::string normalized_title;  // always equals normalize_title(title)
    std::optional<int> year;
    std::vector<std::string> authors;
    std::optional<std::string> venue;
    std::optional<std::string> doi;
    bool selected = false;  // oracle label
    bool stub = false;
    std::set<SourceName> returned_by;               // query-hit provenance
    std::map<SourceName, IndexEvidence> indexed_in;  // title-lookup provenance
    std::map<SourceName, int> ranks;                 // 1-based result position

    bool operator==(const Paper&) const = default;
};

/// Lowercases, folds Latin diacritics to their ASCII base letters, replaces
/// every maximal run of non-alphanumeric characters by a single space and
/// strips the ends. Codepoints outside the Latin tables pass through
/// unchanged. Never throws, even on invalid UTF-8.
std::string normalize_title(std::string_view title);

/// Directed citation edges: (citing, cited) means the citing paper lists the
/// cited paper in its references. Backward snowballing walks out-neighbors,
/// forward snowballing walks in-neighbors.
class CitationGraph {
public:
    /// Returns false when the edge was already present.
    bool add_edge(const PaperId& citing, const PaperId& cited);

    bool has_edge(const PaperId& citing, const PaperId& cited) const;

    /// Out-neighbors: the papers `citing` cites.
    const std::set<PaperId>& references(const PaperId& citing) const;

    /// In-neighbors: the papers citing `cited`.
    const std::set<PaperId>& citers(const PaperId& cited) const;

    std::size_t edge_count() const noexcept { return edge_count_; }

    /// All edges in (citing, cited) lexicographic order.
    std::vector<std::pair<PaperId, PaperId>> edges() const;

    bool operator==(const CitationGraph&) const = default;

private:
    std::map<PaperId, std::set<PaperId>> out_;
    std::map<PaperId, std::set<PaperId>> in_;
    std::size_t edge_count_ = 0;
};

enum class Severity { Warning, Error };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;  // stable machine-readable tag, e.g. "index-conflict"
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

struct RegisterResult {
    PaperId id;
    bool was_duplicate = false;
};

/// The single immutable input to all simulations: source registry, papers and
/// citation graph. Construction is single-writer; after validation the corpus
/// is treated as read-only and may be shared by concurrent readers.
class Corpus {
public:
    void add_source(Source source);
    bool has_source(const SourceName& name) const;
    const std::map<SourceName, SourceKind>& sources() const { return sources_; }

    /// Registers a paper, merging it into an existing one when the duplicate
    /// key matches (normalized title plus year when both years are known,
    /// normalized title alone when either year is unknown). Merging unions
    /// returned_by, merges indexed_in pointwise (yes/no conflicts throw),
    /// keeps the minimum rank per source and ORs the selected flag.
    RegisterResult register_paper(Paper candidate);

    /// Adds a citation edge. The citing paper must exist; an unknown cited
    /// paper becomes a stub when `create_stub` is set, otherwise throws.
    /// Adding an existing edge is a no-op.
    void add_citation(const PaperId& citing, const PaperId& cited, bool create_stub = true);

    /// Inserts a paper under its own id, bypassing duplicate detection.
    /// Used by loaders where the file dictates the ids; semantic duplicates
    /// surface through validate() instead.
    void insert_paper_exact(Paper paper);

    const Paper* find_paper(const PaperId& id) const;
    const Paper& paper(const PaperId& id) const;  // throws UnknownPaperError
    const std::map<PaperId, Paper>& papers() const { return papers_; }

    const CitationGraph& graph() const { return graph_; }
    CitationGraph& graph() { return graph_; }

    /// Ids of all selected papers.
    std::set<PaperId> oracle() const;

    /// Reports every invariant violation (errors) and suspicious pattern
    /// (warnings). An empty result means the corpus is simulation-ready.
    std::vector<Diagnostic> validate() const;

    /// Structural equality: same sources, papers and citation edges.
    bool operator==(const Corpus& other) const;

private:
    PaperId allocate_id();
    const Paper* duplicate_of(const Paper& candidate) const;
    static void merge_into(Paper& target, const Paper& candidate);

    std::map<SourceName, SourceKind> sources_;
    std::map<PaperId, Paper> papers_;
    std::map<std::string, std::set<PaperId>> title_index_;  // non-stub papers
    CitationGraph graph_;
    std::size_t next_auto_id_ = 1;
};

}  // namespace slrsim

#endif  // SLRSIM_CORPUS_HPP
