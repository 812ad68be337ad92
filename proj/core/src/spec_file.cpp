#include "slrsim/spec_file.hpp"

#include <set>

#include "slrsim/ingest.hpp"

namespace slrsim {

using nlohmann::json;

namespace {

// Anything wrong inside a readable strategies file is an invalid spec, a
// domain error; only unreadable/unparsable files are input errors.
[[noreturn]] void schema_fail(const std::string& path, const std::string& message) {
    throw SpecFileError(path, message);
}

SeedRule seed_from_json(const json& seed, const std::string& path) {
    if (!seed.is_object()) schema_fail(path, "expected an object");
    const auto type_it = seed.find("type");
    if (type_it == seed.end() || !type_it->is_string()) {
        schema_fail(path + "/type", "expected a string");
    }
    const auto type = type_it->get<std::string>();
    if (type == "from-db-selected") {
        return SeedFromDbSelected{};
    }
    if (type == "explicit") {
        const auto ids_it = seed.find("ids");
        if (ids_it == seed.end() || !ids_it->is_array()) {
            schema_fail(path + "/ids", "expected an array of paper ids");
        }
        SeedExplicitList list;
        for (std::size_t i = 0; i < ids_it->size(); ++i) {
            if (!(*ids_it)[i].is_string()) {
                schema_fail(path + "/ids/" + std::to_string(i), "expected a string");
            }
            list.ids.push_back((*ids_it)[i].get<std::string>());
        }
        return list;
    }
    if (type == "ranked") {
        SeedRankedSource ranked;
        const auto source_it = seed.find("source");
        if (source_it == seed.end() || !source_it->is_string()) {
            schema_fail(path + "/source", "expected a string");
        }
        ranked.source = source_it->get<std::string>();
        if (const auto cap_it = seed.find("cap"); cap_it != seed.end()) {
            if (!cap_it->is_number_integer()) schema_fail(path + "/cap", "expected an integer");
            ranked.cap = cap_it->get<int>();
            if (ranked.cap < 1) schema_fail(path + "/cap", "expected a positive integer");
        }
        return ranked;
    }
    schema_fail(path + "/type", "expected one of from-db-selected, explicit, ranked");
}

json seed_to_json(const SeedRule& seed) {
    json j;
    if (std::holds_alternative<SeedFromDbSelected>(seed)) {
        j["type"] = "from-db-selected";
    } else if (const auto* list = std::get_if<SeedExplicitList>(&seed)) {
        j["type"] = "explicit";
        j["ids"] = list->ids;
    } else {
        const auto& ranked = std::get<SeedRankedSource>(seed);
        j["type"] = "ranked";
        j["source"] = ranked.source;
        j["cap"] = ranked.cap;
    }
    return j;
}

}  // namespace

SpecFile spec_file_from_json(const json& root) {
    if (!root.is_object()) schema_fail("", "strategies file must be a JSON object");
    const auto strategies_it = root.find("strategies");
    if (strategies_it == root.end() || !strategies_it->is_array()) {
        schema_fail("/strategies", "expected an array");
    }

    SpecFile file;
    std::set<std::string> names;
    for (std::size_t i = 0; i < strategies_it->size(); ++i) {
        const std::string path = "/strategies/" + std::to_string(i);
        const json& entry = (*strategies_it)[i];
        if (!entry.is_object()) schema_fail(path, "expected an object");

        StrategySpec spec;
        const auto name_it = entry.find("name");
        if (name_it == entry.end() || !name_it->is_string() ||
            name_it->get<std::string>().empty()) {
            schema_fail(path + "/name", "expected a non-empty string");
        }
        spec.name = name_it->get<std::string>();
        if (!names.insert(spec.name).second) schema_fail(path + "/name", "duplicate name");

        if (const auto it = entry.find("db_sources"); it != entry.end()) {
            if (!it->is_array()) schema_fail(path + "/db_sources", "expected an array");
            for (std::size_t s = 0; s < it->size(); ++s) {
                if (!(*it)[s].is_string()) {
                    schema_fail(path + "/db_sources/" + std::to_string(s), "expected a string");
                }
                spec.db_sources.insert((*it)[s].get<std::string>());
            }
        }

        const auto seed_it = entry.find("seed");
        if (seed_it == entry.end()) schema_fail(path + "/seed", "missing seed rule");
        spec.seed = seed_from_json(*seed_it, path + "/seed");

        const auto mode_it = entry.find("mode");
        if (mode_it == entry.end() || !mode_it->is_string()) {
            schema_fail(path + "/mode", "expected a string");
        }
        const auto mode = snowball_mode_from_string(mode_it->get<std::string>());
        if (!mode.has_value()) {
            std::string valid;
            for (const auto& name : snowball_mode_names()) {
                if (!valid.empty()) valid += ", ";
                valid += name;
            }
            schema_fail(path + "/mode", "expected one of " + valid);
        }
        spec.mode = *mode;

        if (const auto it = entry.find("max_iterations"); it != entry.end()) {
            if (!it->is_number_integer()) {
                schema_fail(path + "/max_iterations", "expected an integer");
            }
            spec.max_iterations = it->get<int>();
            if (spec.max_iterations < 1) {
                schema_fail(path + "/max_iterations", "expected a positive integer");
            }
        }

        if (std::holds_alternative<SeedFromDbSelected>(spec.seed) && spec.db_sources.empty()) {
            schema_fail(path + "/db_sources",
                        "a from-db-selected seed requires at least one source");
        }
        file.strategies.push_back(std::move(spec));
    }
    return file;
}

json spec_file_to_json(const SpecFile& file) {
    json strategies = json::array();
    for (const StrategySpec& spec : file.strategies) {
        json entry;
        entry["name"] = spec.name;
        if (!spec.db_sources.empty()) entry["db_sources"] = spec.db_sources;
        entry["seed"] = seed_to_json(spec.seed);
        entry["mode"] = to_string(spec.mode);
        entry["max_iterations"] = spec.max_iterations;
        strategies.push_back(std::move(entry));
    }
    return json{{"strategies", std::move(strategies)}};
}

SpecFile load_spec_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& error) {
        throw InputError(path.string() + ": " + error.what());
    }
    return spec_file_from_json(root);
}

void check_spec_against_corpus(const StrategySpec& spec, const Corpus& corpus) {
    for (const SourceName& source : spec.db_sources) {
        if (!corpus.has_source(source)) {
            throw UnknownSourceError(source);
        }
    }
    if (const auto* ranked = std::get_if<SeedRankedSource>(&spec.seed)) {
        if (!corpus.has_source(ranked->source)) throw UnknownSourceError(ranked->source);
    }
}

SpecFile preset_strategies(const Corpus& corpus, const std::string& db_source,
                           const std::string& ranked_source, int cap) {
    if (!corpus.has_source(db_source)) throw UnknownSourceError(db_source);
    if (!corpus.has_source(ranked_source)) throw UnknownSourceError(ranked_source);
    if (cap < 1) throw DomainError("seed cap must be positive");

    std::set<SourceName> all_sources;
    for (const auto& [name, kind] : corpus.sources()) {
        (void)kind;
        all_sources.insert(name);
    }

    const auto single = [&](std::string name, SnowballMode mode) {
        StrategySpec spec;
        spec.name = std::move(name);
        spec.db_sources = {db_source};
        spec.seed = SeedFromDbSelected{};
        spec.mode = mode;
        return spec;
    };

    SpecFile file;
    StrategySpec db;
    db.name = "db";
    db.db_sources = all_sources;
    db.seed = SeedFromDbSelected{};
    db.mode = SnowballMode::None;
    file.strategies.push_back(db);

    StrategySpec sb;
    sb.name = "sb";
    sb.seed = SeedRankedSource{ranked_source, cap};
    sb.mode = SnowballMode::Iterative;
    file.strategies.push_back(sb);

    StrategySpec db_full = db;
    db_full.name = "db-full";
    db_full.mode = SnowballMode::Iterative;
    file.strategies.push_back(db_full);

    file.strategies.push_back(single("scopus-iter", SnowballMode::Iterative));
    file.strategies.push_back(single("scopus-par", SnowballMode::Parallel));
    file.strategies.push_back(single("scopus-bsfs", SnowballMode::SeqBsThenFs));
    file.strategies.push_back(single("scopus-fsbs", SnowballMode::SeqFsThenBs));
    return file;
}

}  // namespace slrsim
