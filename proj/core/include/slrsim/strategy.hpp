#ifndef SLRSIM_STRATEGY_HPP
#define SLRSIM_STRATEGY_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "slrsim/corpus.hpp"
#include "slrsim/metrics.hpp"

namespace slrsim {

/// How snowballing expands the seed set.
///
///   Iterative:   backward and forward together, iterated to fixpoint; the
///                union of both directions feeds the next iteration.
///   Parallel:    backward-only and forward-only closures run independently
///                over the same seed; the results are united. Papers found by
///                one direction never enter the other direction's frontier.
///   SeqBsThenFs: backward closure first; then a forward closure starting
///                from every paper selected so far.
///   SeqFsThenBs: the mirror image.
///   BsOnly / FsOnly: one direction to fixpoint.
///   None:        no snowballing, the seed is the result.
enum class SnowballMode {
    Iterative,
    Parallel,
    SeqBsThenFs,
    SeqFsThenBs,
    BsOnly,
    FsOnly,
    None,
};

std::string to_string(SnowballMode mode);
std::optional<SnowballMode> snowball_mode_from_string(std::string_view text);
const std::vector<std::string>& snowball_mode_names();

inline constexpr int kDefaultSeedCap = 60;
inline constexpr int kDefaultMaxIterations = 50;

/// Seed = the selected papers of a database search over db_sources.
struct SeedFromDbSelected {
    bool operator==(const SeedFromDbSelected&) const = default;
};

/// Seed = a fixed list of paper ids.
struct SeedExplicitList {
    std::vector<PaperId> ids;

    bool operator==(const SeedExplicitList&) const = default;
};

/// Seed = papers ranked in the top `cap` results of one source. Every paper
/// returned by the source must carry a rank.
struct SeedRankedSource {
    SourceName source;
    int cap = kDefaultSeedCap;

    bool operator==(const SeedRankedSource&) const = default;
};

using SeedRule = std::variant<SeedFromDbSelected, SeedExplicitList, SeedRankedSource>;

/// Declarative description of one search strategy.
struct StrategySpec {
    std::string name;
    std::set<SourceName> db_sources;
    SeedRule seed = SeedExplicitList{};
    SnowballMode mode = SnowballMode::None;
    int max_iterations = kDefaultMaxIterations;

    bool operator==(const StrategySpec&) const = default;
};

enum class Phase { Seed, Backward, Forward, Union };

std::string to_string(Phase phase);

/// One row of a simulation trace. `new_*` sets are relative to the
/// accumulated state at the start of the step; accumulated counts include
/// them. In iterative runs the backward and forward records of one iteration
/// are both relative to the same pre-iteration state and only the union
/// record advances it.
struct IterationRecord {
    int index = 0;  // 0 = seed
    Phase phase = Phase::Seed;
    std::set<PaperId> new_visited;
    std::set<PaperId> new_selected;
    std::size_t accum_visited = 0;
    std::size_t accum_selected = 0;
    Metrics metrics;

    bool operator==(const IterationRecord&) const = default;
};

struct StrategyOutcome {
    StrategySpec spec;
    std::set<PaperId> visited;
    std::set<PaperId> selected;  // always visited ∩ oracle
    std::vector<IterationRecord> trace;
    Metrics final_metrics;
    bool iteration_cap_exceeded = false;
    /// Citation edges whose traversal discovered a paper, in citation
    /// orientation (citing, cited); one edge per discovered paper.
    std::vector<std::pair<PaperId, PaperId>> traversal_edges;
};

/// Union of the query hits of the given sources; no snowballing.
StrategyOutcome db_search(const Corpus& corpus, const std::set<SourceName>& sources);

/// Out-neighbors of the frontier (reference lists), minus already_visited.
std::set<PaperId> backward_candidates(const Corpus& corpus, const std::set<PaperId>& frontier,
                                      const std::set<PaperId>& already_visited);

/// In-neighbors of the frontier (citing papers), minus already_visited.
std::set<PaperId> forward_candidates(const Corpus& corpus, const std::set<PaperId>& frontier,
                                     const std::set<PaperId>& already_visited);

struct SnowballResult {
    std::set<PaperId> visited;
    std::set<PaperId> selected;
    std::vector<IterationRecord> records;  // iteration records only, no seed row
    bool cap_exceeded = false;
    std::vector<std::pair<PaperId, PaperId>> traversal_edges;
};

/// Expands the seed according to `mode`. The frontier of every step consists
/// of the newly selected papers of the previous step; each paper is visited
/// at most once per run; a step that selects nothing terminates its closure.
SnowballResult snowball(const Corpus& corpus, const std::set<PaperId>& seed_selected,
                        const std::set<PaperId>& seed_visited, SnowballMode mode,
                        int max_iterations = kDefaultMaxIterations);

/// Resolves the seed rule, snowballs, and computes final metrics.
StrategyOutcome run_strategy(const Corpus& corpus, const StrategySpec& spec);

/// Selected-set partition of independent backward and forward closures over
/// the same seed; seed papers are excluded from both sides.
struct Complementarity {
    std::set<PaperId> bs_selected;
    std::set<PaperId> fs_selected;
    std::set<PaperId> overlap;
    std::set<PaperId> bs_only;
    std::set<PaperId> fs_only;

    bool operator==(const Complementarity&) const = default;
};

Complementarity complementarity(const Corpus& corpus, const std::set<PaperId>& seed_selected,
                                const std::set<PaperId>& seed_visited);

nlohmann::json metrics_to_json(const Metrics& metrics);
nlohmann::json trace_to_json(const std::vector<IterationRecord>& trace);

}  // namespace slrsim

#endif  // SLRSIM_STRATEGY_HPP
