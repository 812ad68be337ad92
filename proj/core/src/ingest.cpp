#include "slrsim/ingest.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace slrsim {

namespace {

std::optional<int> parse_year(const std::string& text) {
    if (text.empty() || text.size() > 9) return std::nullopt;
    for (const char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return std::nullopt;
    }
    return std::stoi(text);
}

// BibTeX convention: authors are separated by the word "and".
std::vector<std::string> split_authors(const std::string& value) {
    std::vector<std::string> authors;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t end = value.find(" and ", start);
        if (end == std::string::npos) end = value.size();
        std::string author = value.substr(start, end - start);
        const auto first = author.find_first_not_of(" \t\r\n");
        const auto last = author.find_last_not_of(" \t\r\n");
        if (first != std::string::npos) {
            authors.push_back(author.substr(first, last - first + 1));
        }
        if (end == value.size()) break;
        start = end + 5;
    }
    return authors;
}

Paper paper_from_entry(const BibEntry& entry) {
    Paper paper;
    const std::string* title = entry.find("title");
    if (title == nullptr || title->empty()) {
        throw EmptyTitleError("bibtex entry '" + entry.cite_key + "' has no title");
    }
    paper.title = *title;
    if (const std::string* year = entry.find("year"); year != nullptr) {
        paper.year = parse_year(*year);
    }
    if (const std::string* author = entry.find("author"); author != nullptr) {
        paper.authors = split_authors(*author);
    }
    if (const std::string* journal = entry.find("journal"); journal != nullptr) {
        paper.venue = *journal;
    } else if (const std::string* booktitle = entry.find("booktitle"); booktitle != nullptr) {
        paper.venue = *booktitle;
    }
    if (const std::string* doi = entry.find("doi"); doi != nullptr) {
        paper.doi = *doi;
    }
    return paper;
}

}  // namespace

ImportStats import_references(Corpus& corpus, const PaperId& citing,
                              const std::vector<BibEntry>& entries) {
    if (corpus.find_paper(citing) == nullptr) throw UnknownPaperError(citing);

    ImportStats stats;
    for (const BibEntry& entry : entries) {
        const RegisterResult registered = corpus.register_paper(paper_from_entry(entry));
        if (registered.was_duplicate) {
            ++stats.merged_duplicates;
        } else {
            ++stats.new_papers;
        }
        if (registered.id != citing && !corpus.graph().has_edge(citing, registered.id)) {
            corpus.add_citation(citing, registered.id);
            ++stats.edges_added;
        }
    }
    return stats;
}

ImportStats import_citers(Corpus& corpus,
                          const std::vector<std::pair<std::string, std::string>>& rows,
                          const ImportOptions& options) {
    ImportStats stats;
    const auto resolve = [&](const std::string& key, bool is_citing) -> PaperId {
        if (corpus.find_paper(key) != nullptr) return key;
        if (options.resolve_titles) {
            const RegisterResult registered = corpus.register_paper([&] {
                Paper candidate;
                candidate.title = key;
                return candidate;
            }());
            if (registered.was_duplicate) {
                ++stats.merged_duplicates;
            } else {
                ++stats.new_papers;
            }
            return registered.id;
        }
        if (is_citing && options.create_stubs) {
            Paper stub;
            stub.id = key;
            stub.stub = true;
            corpus.insert_paper_exact(std::move(stub));
            ++stats.stubs_created;
            return key;
        }
        throw UnknownPaperError(key);
    };

    for (const auto& [citing_key, cited_key] : rows) {
        const PaperId cited = resolve(cited_key, false);
        const PaperId citing = resolve(citing_key, true);
        if (!corpus.graph().has_edge(citing, cited)) {
            corpus.add_citation(citing, cited, options.create_stubs);
            ++stats.edges_added;
        }
    }
    return stats;
}

std::vector<std::pair<std::string, std::string>> parse_citers_csv(std::string_view text) {
    // Minimal RFC-4180 reader: quoted fields, "" escapes, CRLF or LF records.
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    bool after_quote = false;  // a closed quoted field only admits , or a record end
    int line = 1;

    const auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_started = false;
        after_quote = false;
    };
    const auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    i += 2;
                    continue;
                }
                in_quotes = false;
                after_quote = true;
                ++i;
                continue;
            }
            if (c == '\n') ++line;
            field.push_back(c);
            ++i;
            continue;
        }
        switch (c) {
            case '"':
                if (field_started || !field.empty()) {
                    throw CsvError(line, "quote inside an unquoted field");
                }
                in_quotes = true;
                field_started = true;
                ++i;
                break;
            case ',':
                end_field();
                ++i;
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') {
                    end_record();
                    ++line;
                    i += 2;
                } else {
                    throw CsvError(line, "bare carriage return");
                }
                break;
            case '\n':
                end_record();
                ++line;
                ++i;
                break;
            default:
                if (after_quote) throw CsvError(line, "content after a closing quote");
                field.push_back(c);
                field_started = true;
                ++i;
                break;
        }
    }
    if (in_quotes) throw CsvError(line, "unterminated quoted field");
    if (field_started || !field.empty() || !record.empty()) end_record();

    if (records.empty()) throw CsvError(1, "missing header 'citing_id,cited_id'");
    if (records.front() != std::vector<std::string>{"citing_id", "cited_id"}) {
        throw CsvError(1, "header must be exactly 'citing_id,cited_id'");
    }

    std::vector<std::pair<std::string, std::string>> rows;
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != 2) {
            throw CsvError(static_cast<int>(r + 1), "expected exactly two columns");
        }
        rows.emplace_back(records[r][0], records[r][1]);
    }
    return rows;
}

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
    throw SchemaError(path, message);
}

const json& expect(const json& object, const std::string& path, const char* key,
                   json::value_t type, const char* type_name) {
    const auto it = object.find(key);
    if (it == object.end()) schema_fail(path + "/" + key, "missing required field");
    if (type == json::value_t::number_integer) {
        if (!it->is_number_integer()) schema_fail(path + "/" + key, "expected an integer");
    } else if (it->type() != type) {
        schema_fail(path + "/" + key, std::string("expected ") + type_name);
    }
    return *it;
}

void reject_unknown_keys(const json& object, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : object.items()) {
        (void)value;
        bool known = false;
        for (const char* candidate : allowed) {
            if (key == candidate) {
                known = true;
                break;
            }
        }
        if (!known) schema_fail(path + "/" + key, "unknown field");
    }
}

}  // namespace

Corpus corpus_from_json(const json& root) {
    if (!root.is_object()) schema_fail("", "corpus file must be a JSON object");
    reject_unknown_keys(root, "", {"sources", "papers", "citations"});

    Corpus corpus;

    const json& sources = expect(root, "", "sources", json::value_t::array, "an array");
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const std::string path = "/sources/" + std::to_string(i);
        const json& entry = sources[i];
        if (!entry.is_object()) schema_fail(path, "expected an object");
        reject_unknown_keys(entry, path, {"name", "kind"});
        const json& name = expect(entry, path, "name", json::value_t::string, "a string");
        const json& kind = expect(entry, path, "kind", json::value_t::string, "a string");
        if (name.get<std::string>().empty()) schema_fail(path + "/name", "must not be empty");
        const auto parsed_kind = source_kind_from_string(kind.get<std::string>());
        if (!parsed_kind.has_value()) {
            schema_fail(path + "/kind",
                        "expected one of publisher-library, index-database, search-engine");
        }
        if (corpus.has_source(name.get<std::string>())) {
            schema_fail(path + "/name", "duplicate source name");
        }
        corpus.add_source({name.get<std::string>(), *parsed_kind});
    }

    const json& papers = expect(root, "", "papers", json::value_t::array, "an array");
    for (std::size_t i = 0; i < papers.size(); ++i) {
        const std::string path = "/papers/" + std::to_string(i);
        const json& entry = papers[i];
        if (!entry.is_object()) schema_fail(path, "expected an object");
        reject_unknown_keys(entry, path,
                            {"id", "title", "year", "authors", "venue", "doi", "selected",
                             "stub", "returned_by", "indexed_in", "ranks"});

        Paper paper;
        paper.id = expect(entry, path, "id", json::value_t::string, "a string").get<std::string>();
        if (paper.id.empty()) schema_fail(path + "/id", "must not be empty");
        if (corpus.find_paper(paper.id) != nullptr) schema_fail(path + "/id", "duplicate paper id");
        paper.title =
            expect(entry, path, "title", json::value_t::string, "a string").get<std::string>();
        paper.selected =
            expect(entry, path, "selected", json::value_t::boolean, "a boolean").get<bool>();
        if (const auto it = entry.find("stub"); it != entry.end()) {
            if (!it->is_boolean()) schema_fail(path + "/stub", "expected a boolean");
            paper.stub = it->get<bool>();
        }
        if (!paper.stub && paper.title.empty()) {
            schema_fail(path + "/title", "must not be empty for a non-stub paper");
        }
        if (const auto it = entry.find("year"); it != entry.end()) {
            if (!it->is_number_integer()) schema_fail(path + "/year", "expected an integer");
            paper.year = it->get<int>();
        }
        const json& authors = expect(entry, path, "authors", json::value_t::array, "an array");
        for (std::size_t a = 0; a < authors.size(); ++a) {
            if (!authors[a].is_string()) {
                schema_fail(path + "/authors/" + std::to_string(a), "expected a string");
            }
            paper.authors.push_back(authors[a].get<std::string>());
        }
        if (const auto it = entry.find("venue"); it != entry.end()) {
            if (!it->is_string()) schema_fail(path + "/venue", "expected a string");
            paper.venue = it->get<std::string>();
        }
        if (const auto it = entry.find("doi"); it != entry.end()) {
            if (!it->is_string()) schema_fail(path + "/doi", "expected a string");
            paper.doi = it->get<std::string>();
        }
        const json& returned =
            expect(entry, path, "returned_by", json::value_t::array, "an array");
        for (std::size_t r = 0; r < returned.size(); ++r) {
            const std::string item_path = path + "/returned_by/" + std::to_string(r);
            if (!returned[r].is_string()) schema_fail(item_path, "expected a string");
            const auto source = returned[r].get<std::string>();
            if (!corpus.has_source(source)) schema_fail(item_path, "undeclared source");
            if (!paper.returned_by.insert(source).second) {
                schema_fail(item_path, "duplicate source");
            }
        }
        if (const auto it = entry.find("indexed_in"); it != entry.end()) {
            if (!it->is_object()) schema_fail(path + "/indexed_in", "expected an object");
            for (const auto& [source, value] : it->items()) {
                const std::string item_path = path + "/indexed_in/" + source;
                if (!corpus.has_source(source)) schema_fail(item_path, "undeclared source");
                if (!value.is_string()) schema_fail(item_path, "expected a string");
                const auto evidence = index_evidence_from_string(value.get<std::string>());
                if (!evidence.has_value()) {
                    schema_fail(item_path, "expected one of yes, no, unknown");
                }
                paper.indexed_in.emplace(source, *evidence);
            }
        }
        if (const auto it = entry.find("ranks"); it != entry.end()) {
            if (!it->is_object()) schema_fail(path + "/ranks", "expected an object");
            for (const auto& [source, value] : it->items()) {
                const std::string item_path = path + "/ranks/" + source;
                if (!corpus.has_source(source)) schema_fail(item_path, "undeclared source");
                if (!value.is_number_integer()) schema_fail(item_path, "expected an integer");
                const int rank = value.get<int>();
                if (rank < 1) schema_fail(item_path, "expected a positive integer");
                paper.ranks.emplace(source, rank);
            }
        }
        corpus.insert_paper_exact(std::move(paper));
    }

    const json& citations = expect(root, "", "citations", json::value_t::array, "an array");
    for (std::size_t i = 0; i < citations.size(); ++i) {
        const std::string path = "/citations/" + std::to_string(i);
        const json& edge = citations[i];
        if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string()) {
            schema_fail(path, "expected a [citing, cited] pair of strings");
        }
        const auto citing = edge[0].get<std::string>();
        const auto cited = edge[1].get<std::string>();
        if (corpus.find_paper(citing) == nullptr) schema_fail(path, "undeclared citing paper");
        if (corpus.find_paper(cited) == nullptr) schema_fail(path, "undeclared cited paper");
        if (citing == cited) schema_fail(path, "self-citation");
        if (corpus.graph().has_edge(citing, cited)) schema_fail(path, "duplicate citation");
        corpus.graph().add_edge(citing, cited);
    }

    return corpus;
}

json corpus_to_json(const Corpus& corpus) {
    json root;

    json sources = json::array();
    for (const auto& [name, kind] : corpus.sources()) {
        sources.push_back({{"name", name}, {"kind", to_string(kind)}});
    }
    root["sources"] = std::move(sources);

    json papers = json::array();
    for (const auto& [id, paper] : corpus.papers()) {
        (void)id;
        json entry;
        entry["id"] = paper.id;
        entry["title"] = paper.title;
        entry["selected"] = paper.selected;
        entry["authors"] = paper.authors;
        entry["returned_by"] = paper.returned_by;
        if (paper.stub) entry["stub"] = true;
        if (paper.year.has_value()) entry["year"] = *paper.year;
        if (paper.venue.has_value()) entry["venue"] = *paper.venue;
        if (paper.doi.has_value()) entry["doi"] = *paper.doi;
        if (!paper.indexed_in.empty()) {
            json indexed = json::object();
            for (const auto& [source, evidence] : paper.indexed_in) {
                indexed[source] = to_string(evidence);
            }
            entry["indexed_in"] = std::move(indexed);
        }
        if (!paper.ranks.empty()) {
            json ranks = json::object();
            for (const auto& [source, rank] : paper.ranks) ranks[source] = rank;
            entry["ranks"] = std::move(ranks);
        }
        papers.push_back(std::move(entry));
    }
    root["papers"] = std::move(papers);

    json citations = json::array();
    for (const auto& [citing, cited] : corpus.graph().edges()) {
        citations.push_back(json::array({citing, cited}));
    }
    root["citations"] = std::move(citations);

    return root;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path.string());
    return std::move(buffer).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("cannot write " + path.string());
}

Corpus load_corpus(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& error) {
        throw InputError(path.string() + ": " + error.what());
    }
    return corpus_from_json(root);
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    write_text_file(path, corpus_to_json(corpus).dump(2) + "\n");
}

}  // namespace slrsim
