#include "slrsim/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>

namespace slrsim {

std::string to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::PublisherLibrary: return "publisher-library";
        case SourceKind::IndexDatabase: return "index-database";
        case SourceKind::SearchEngine: return "search-engine";
    }
    return "publisher-library";
}

std::optional<SourceKind> source_kind_from_string(std::string_view text) {
    if (text == "publisher-library") return SourceKind::PublisherLibrary;
    if (text == "index-database") return SourceKind::IndexDatabase;
    if (text == "search-engine") return SourceKind::SearchEngine;
    return std::nullopt;
}

std::string to_string(IndexEvidence evidence) {
    switch (evidence) {
        case IndexEvidence::Yes: return "yes";
        case IndexEvidence::No: return "no";
        case IndexEvidence::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<IndexEvidence> index_evidence_from_string(std::string_view text) {
    if (text == "yes") return IndexEvidence::Yes;
    if (text == "no") return IndexEvidence::No;
    if (text == "unknown") return IndexEvidence::Unknown;
    return std::nullopt;
}

namespace {

// ASCII expansions for the Latin-1 Supplement (U+00C0..U+00FF) and Latin
// Extended-A (U+0100..U+017F) blocks. An empty entry marks a codepoint that
// is not a letter (multiplication/division signs).
const char* latin_fold(char32_t cp) {
    static constexpr std::array<const char*, 0x40> kLatin1 = {
        //  C0   C1   C2   C3   C4   C5   C6    C7   C8   C9   CA   CB
        "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e",
        //  CC   CD   CE   CF   D0   D1   D2   D3   D4   D5   D6   D7(×)
        "i", "i", "i", "i", "d", "n", "o", "o", "o", "o", "o", "",
        //  D8   D9   DA   DB   DC   DD   DE    DF
        "o", "u", "u", "u", "u", "y", "th", "ss",
        //  E0   E1   E2   E3   E4   E5   E6    E7   E8   E9   EA   EB
        "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e",
        //  EC   ED   EE   EF   F0   F1   F2   F3   F4   F5   F6   F7(÷)
        "i", "i", "i", "i", "d", "n", "o", "o", "o", "o", "o", "",
        //  F8   F9   FA   FB   FC   FD   FE    FF
        "o", "u", "u", "u", "u", "y", "th", "y"};

    if (cp >= 0xC0 && cp <= 0xFF) {
        const char* folded = kLatin1[cp - 0xC0];
        return *folded == '\0' ? nullptr : folded;
    }
    if (cp < 0x100 || cp > 0x17F) return nullptr;

    switch (cp) {
        case 0x132: case 0x133: return "ij";
        case 0x152: case 0x153: return "oe";
        case 0x149: return "n";
        default: break;
    }
    // The rest of Latin Extended-A alternates uppercase/lowercase variants of
    // a single base letter per small range.
    struct Range { char32_t first, last; const char* base; };
    static constexpr std::array<Range, 24> kRanges = {{
        {0x100, 0x105, "a"}, {0x106, 0x10D, "c"}, {0x10E, 0x111, "d"},
        {0x112, 0x11B, "e"}, {0x11C, 0x123, "g"}, {0x124, 0x127, "h"},
        {0x128, 0x131, "i"}, {0x134, 0x135, "j"}, {0x136, 0x138, "k"},
        {0x139, 0x142, "l"}, {0x143, 0x148, "n"}, {0x14A, 0x14B, "n"},
        {0x14C, 0x151, "o"}, {0x154, 0x159, "r"}, {0x15A, 0x161, "s"},
        {0x162, 0x167, "t"}, {0x168, 0x173, "u"}, {0x174, 0x175, "w"},
        {0x176, 0x178, "y"}, {0x179, 0x17E, "z"}, {0x17F, 0x17F, "s"},
        {0, 0, nullptr}, {0, 0, nullptr}, {0, 0, nullptr},
    }};
    for (const auto& range : kRanges) {
        if (range.base != nullptr && cp >= range.first && cp <= range.last) return range.base;
    }
    return nullptr;
}

// Decodes one UTF-8 codepoint starting at text[i]. Invalid sequences decode
// as a single replacement (0xFFFD) consuming one byte, so arbitrary input is
// always accepted.
char32_t decode_utf8(std::string_view text, std::size_t& i) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if (byte < 0x80) {
        ++i;
        return byte;
    }
    int extra = 0;
    char32_t cp = 0;
    if ((byte & 0xE0) == 0xC0) {
        extra = 1;
        cp = byte & 0x1F;
    } else if ((byte & 0xF0) == 0xE0) {
        extra = 2;
        cp = byte & 0x0F;
    } else if ((byte & 0xF8) == 0xF0) {
        extra = 3;
        cp = byte & 0x07;
    } else {
        ++i;
        return 0xFFFD;
    }
    if (i + extra >= text.size()) {
        ++i;
        return 0xFFFD;
    }
    for (int k = 1; k <= extra; ++k) {
        const auto cont = static_cast<unsigned char>(text[i + k]);
        if ((cont & 0xC0) != 0x80) {
            ++i;
            return 0xFFFD;
        }
        cp = (cp << 6) | (cont & 0x3F);
    }
    i += 1 + static_cast<std::size_t>(extra);
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

}  // namespace

std::string normalize_title(std::string_view title) {
    std::string out;
    out.reserve(title.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < title.size()) {
        const char32_t cp = decode_utf8(title, i);
        std::string piece;
        if (cp < 0x80) {
            const auto ch = static_cast<unsigned char>(cp);
            if (std::isalnum(ch) != 0) piece.push_back(static_cast<char>(std::tolower(ch)));
        } else if (const char* folded = latin_fold(cp); folded != nullptr) {
            piece = folded;
        } else if (cp >= 0x180 && cp != 0xFFFD) {
            // Outside the fold tables: pass through, treated as a letter.
            encode_utf8(cp, piece);
        }
        if (piece.empty()) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out += piece;
    }
    return out;
}

bool CitationGraph::add_edge(const PaperId& citing, const PaperId& cited) {
    const bool inserted = out_[citing].insert(cited).second;
    if (inserted) {
        in_[cited].insert(citing);
        ++edge_count_;
    }
    return inserted;
}

bool CitationGraph::has_edge(const PaperId& citing, const PaperId& cited) const {
    const auto it = out_.find(citing);
    return it != out_.end() && it->second.count(cited) > 0;
}

const std::set<PaperId>& CitationGraph::references(const PaperId& citing) const {
    static const std::set<PaperId> kEmpty;
    const auto it = out_.find(citing);
    return it == out_.end() ? kEmpty : it->second;
}

const std::set<PaperId>& CitationGraph::citers(const PaperId& cited) const {
    static const std::set<PaperId> kEmpty;
    const auto it = in_.find(cited);
    return it == in_.end() ? kEmpty : it->second;
}

std::vector<std::pair<PaperId, PaperId>> CitationGraph::edges() const {
    std::vector<std::pair<PaperId, PaperId>> result;
    result.reserve(edge_count_);
    for (const auto& [citing, cited_set] : out_) {
        for (const auto& cited : cited_set) result.emplace_back(citing, cited);
    }
    return result;
}

void Corpus::add_source(Source source) {
    if (source.name.empty()) throw DomainError("source name must not be empty");
    if (sources_.count(source.name) > 0) {
        throw DomainError("source already declared: " + source.name);
    }
    sources_.emplace(std::move(source.name), source.kind);
}

bool Corpus::has_source(const SourceName& name) const { return sources_.count(name) > 0; }

PaperId Corpus::allocate_id() {
    while (true) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "x%04zu", next_auto_id_++);
        PaperId id = buf;
        if (papers_.count(id) == 0) return id;
    }
}

// Returns the paper the candidate collides with under the duplicate key, or
// nullptr. When the candidate's year is unknown it can match several papers
// that differ only in year; the smallest id wins to keep merges deterministic.
const Paper* Corpus::duplicate_of(const Paper& candidate) const {
    const auto it = title_index_.find(candidate.normalized_title);
    if (it == title_index_.end()) return nullptr;
    for (const PaperId& id : it->second) {
        const Paper& existing = papers_.at(id);
        if (candidate.year.has_value() && existing.year.has_value() &&
            *candidate.year != *existing.year) {
            continue;
        }
        return &existing;
    }
    return nullptr;
}

void Corpus::merge_into(Paper& target, const Paper& candidate) {
    for (const auto& source : candidate.returned_by) target.returned_by.insert(source);
    for (const auto& [source, evidence] : candidate.indexed_in) {
        const auto it = target.indexed_in.find(source);
        if (it == target.indexed_in.end()) {
            target.indexed_in.emplace(source, evidence);
        } else if (it->second == IndexEvidence::Unknown) {
            it->second = evidence;
        } else if (evidence != IndexEvidence::Unknown && evidence != it->second) {
            throw ConflictingIndexEvidenceError(
                "paper '" + target.id + "' is marked both indexed and not indexed in source '" +
                source + "'");
        }
    }
    for (const auto& [source, rank] : candidate.ranks) {
        const auto it = target.ranks.find(source);
        if (it == target.ranks.end()) {
            target.ranks.emplace(source, rank);
        } else {
            it->second = std::min(it->second, rank);
        }
    }
    target.selected = target.selected || candidate.selected;
    if (!target.year.has_value()) target.year = candidate.year;
    if (!target.venue.has_value()) target.venue = candidate.venue;
    if (!target.doi.has_value()) target.doi = candidate.doi;
    if (target.authors.empty()) target.authors = candidate.authors;
}

RegisterResult Corpus::register_paper(Paper candidate) {
    if (candidate.title.empty()) throw EmptyTitleError("cannot register a paper with no title");
    candidate.normalized_title = normalize_title(candidate.title);
    candidate.stub = false;

    if (const Paper* existing = duplicate_of(candidate); existing != nullptr) {
        Paper merged = *existing;
        merge_into(merged, candidate);
        papers_[existing->id] = std::move(merged);
        return {existing->id, true};
    }

    if (candidate.id.empty()) {
        candidate.id = allocate_id();
    } else if (papers_.count(candidate.id) > 0) {
        throw DomainError("paper id already in use: " + candidate.id);
    }
    const PaperId id = candidate.id;
    title_index_[candidate.normalized_title].insert(id);
    papers_.emplace(id, std::move(candidate));
    return {id, false};
}

void Corpus::add_citation(const PaperId& citing, const PaperId& cited, bool create_stub) {
    if (citing == cited) throw SelfCitationError("paper cannot cite itself: " + citing);
    if (papers_.count(citing) == 0) throw UnknownPaperError(citing);
    if (papers_.count(cited) == 0) {
        if (!create_stub) throw UnknownPaperError(cited);
        Paper stub;
        stub.id = cited;
        stub.stub = true;
        papers_.emplace(cited, std::move(stub));
    }
    graph_.add_edge(citing, cited);
}

void Corpus::insert_paper_exact(Paper paper) {
    if (paper.id.empty()) throw DomainError("paper id must not be empty");
    if (papers_.count(paper.id) > 0) throw DomainError("paper id already in use: " + paper.id);
    if (!paper.stub && paper.title.empty()) {
        throw EmptyTitleError("paper '" + paper.id + "' has no title");
    }
    paper.normalized_title = normalize_title(paper.title);
    if (!paper.stub) title_index_[paper.normalized_title].insert(paper.id);
    papers_.emplace(paper.id, std::move(paper));
}

const Paper* Corpus::find_paper(const PaperId& id) const {
    const auto it = papers_.find(id);
    return it == papers_.end() ? nullptr : &it->second;
}

const Paper& Corpus::paper(const PaperId& id) const {
    const Paper* found = find_paper(id);
    if (found == nullptr) throw UnknownPaperError(id);
    return *found;
}

std::set<PaperId> Corpus::oracle() const {
    std::set<PaperId> result;
    for (const auto& [id, paper] : papers_) {
        if (paper.selected) result.insert(id);
    }
    return result;
}

bool Corpus::operator==(const Corpus& other) const {
    return sources_ == other.sources_ && papers_ == other.papers_ && graph_ == other.graph_;
}

std::vector<Diagnostic> Corpus::validate() const {
    std::vector<Diagnostic> diags;
    const auto error = [&diags](std::string code, std::string message) {
        diags.push_back({Severity::Error, std::move(code), std::move(message)});
    };
    const auto warning = [&diags](std::string code, std::string message) {
        diags.push_back({Severity::Warning, std::move(code), std::move(message)});
    };

    for (const auto& [id, paper] : papers_) {
        if (paper.normalized_title != normalize_title(paper.title)) {
            error("normalized-title", "paper '" + id + "': stored normalized title is stale");
        }
        if (!paper.stub && paper.title.empty()) {
            error("empty-title", "paper '" + id + "' has no title");
        }
        if (paper.stub && paper.selected) {
            error("stub-selected", "stub paper '" + id + "' is marked selected");
        }
        if (paper.stub && !paper.returned_by.empty()) {
            error("stub-returned", "stub paper '" + id + "' has query-hit provenance");
        }
        for (const auto& source : paper.returned_by) {
            if (!has_source(source)) {
                error("unknown-source",
                      "paper '" + id + "' returned by undeclared source '" + source + "'");
            }
            const auto it = paper.indexed_in.find(source);
            if (it != paper.indexed_in.end() && it->second == IndexEvidence::No) {
                error("index-conflict", "paper '" + id + "' was returned by source '" + source +
                                            "' but is marked as not indexed there");
            }
        }
        for (const auto& [source, evidence] : paper.indexed_in) {
            (void)evidence;
            if (!has_source(source)) {
                error("unknown-source",
                      "paper '" + id + "' has index evidence for undeclared source '" + source + "'");
            }
        }
        for (const auto& [source, rank] : paper.ranks) {
            if (!has_source(source)) {
                error("unknown-source",
                      "paper '" + id + "' has a rank for undeclared source '" + source + "'");
            }
            if (rank < 1) {
                error("bad-rank", "paper '" + id + "' has non-positive rank for source '" +
                                      source + "'");
            }
            if (paper.returned_by.count(source) == 0) {
                error("rank-without-return", "paper '" + id + "' carries a rank for source '" +
                                                 source + "' but was not returned by it");
            }
        }
        if (paper.selected && !paper.stub && paper.returned_by.empty() &&
            paper.indexed_in.empty() && graph_.references(id).empty() &&
            graph_.citers(id).empty()) {
            warning("no-provenance", "selected paper '" + id + "' has no provenance at all");
        }
    }

    for (const auto& [citing, cited] : graph_.edges()) {
        if (papers_.count(citing) == 0) {
            error("edge-missing-endpoint", "citation from unknown paper '" + citing + "'");
        }
        if (papers_.count(cited) == 0) {
            error("edge-missing-endpoint", "citation to unknown paper '" + cited + "'");
        }
    }

    // Duplicate-key scan across non-stub papers: same normalized title and
    // compatible years means the pair should have been merged.
    for (const auto& [title, ids] : title_index_) {
        (void)title;
        for (auto first = ids.begin(); first != ids.end(); ++first) {
            for (auto second = std::next(first); second != ids.end(); ++second) {
                const Paper& a = papers_.at(*first);
                const Paper& b = papers_.at(*second);
                if (a.year.has_value() && b.year.has_value() && *a.year != *b.year) continue;
                error("duplicate-key",
                      "papers '" + *first + "' and '" + *second + "' share a duplicate key");
            }
        }
    }

    bool any_selected = false;
    for (const auto& [id, paper] : papers_) {
        (void)id;
        if (paper.selected) {
            any_selected = true;
            break;
        }
    }
    if (!any_selected) {
        error("empty-oracle", "corpus has no selected papers; simulations need an oracle");
    }

    return diags;
}

}  // namespace slrsim
