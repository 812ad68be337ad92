#ifndef SLRSIM_SPEC_FILE_HPP
#define SLRSIM_SPEC_FILE_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slrsim/corpus.hpp"
#include "slrsim/strategy.hpp"

namespace slrsim {

/// A list of named strategy specs, as stored in a strategies JSON file:
///
///   { "strategies": [ { "name": ..., "db_sources": [...],
///                       "seed": {"type": ...}, "mode": ..., "max_iterations": ... } ] }
struct SpecFile {
    std::vector<StrategySpec> strategies;
};

SpecFile spec_file_from_json(const nlohmann::json& json);
nlohmann::json spec_file_to_json(const SpecFile& file);
SpecFile load_spec_file(const std::filesystem::path& path);

/// Throws when the strategy references sources the corpus does not declare.
void check_spec_against_corpus(const StrategySpec& spec, const Corpus& corpus);

/// The standard seven strategies, expanded against a concrete corpus:
/// db, sb, db-full, scopus-iter, scopus-par, scopus-bsfs, scopus-fsbs.
/// `db_source` names the single-source strategies' library and
/// `ranked_source` the engine whose ranked results seed the sb strategy.
SpecFile preset_strategies(const Corpus& corpus, const std::string& db_source = "Scopus",
                           const std::string& ranked_source = "Google Scholar",
                           int cap = kDefaultSeedCap);

}  // namespace slrsim

#endif  // SLRSIM_SPEC_FILE_HPP
