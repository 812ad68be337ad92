#include "slrsim/strategy.hpp"

#include <algorithm>

namespace slrsim {

std::string to_string(SnowballMode mode) {
    switch (mode) {
        case SnowballMode::Iterative: return "iterative";
        case SnowballMode::Parallel: return "parallel";
        case SnowballMode::SeqBsThenFs: return "seq-bs-fs";
        case SnowballMode::SeqFsThenBs: return "seq-fs-bs";
        case SnowballMode::BsOnly: return "bs-only";
        case SnowballMode::FsOnly: return "fs-only";
        case SnowballMode::None: return "none";
    }
    return "none";
}

std::optional<SnowballMode> snowball_mode_from_string(std::string_view text) {
    if (text == "iterative") return SnowballMode::Iterative;
    if (text == "parallel") return SnowballMode::Parallel;
    if (text == "seq-bs-fs") return SnowballMode::SeqBsThenFs;
    if (text == "seq-fs-bs") return SnowballMode::SeqFsThenBs;
    if (text == "bs-only") return SnowballMode::BsOnly;
    if (text == "fs-only") return SnowballMode::FsOnly;
    if (text == "none") return SnowballMode::None;
    return std::nullopt;
}

const std::vector<std::string>& snowball_mode_names() {
    static const std::vector<std::string> kNames = {
        "iterative", "parallel", "seq-bs-fs", "seq-fs-bs", "bs-only", "fs-only", "none"};
    return kNames;
}

std::string to_string(Phase phase) {
    switch (phase) {
        case Phase::Seed: return "seed";
        case Phase::Backward: return "backward";
        case Phase::Forward: return "forward";
        case Phase::Union: return "union";
    }
    return "seed";
}

namespace {

using Edge = std::pair<PaperId, PaperId>;

std::set<PaperId> intersect(const std::set<PaperId>& a, const std::set<PaperId>& b) {
    std::set<PaperId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

std::set<PaperId> minus(const std::set<PaperId>& a, const std::set<PaperId>& b) {
    std::set<PaperId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
    return out;
}

/// Unvisited neighbors of the frontier in one direction, plus the citation
/// edge that first reached each of them (frontier scanned in id order).
struct Expansion {
    std::set<PaperId> found;
    std::vector<Edge> edges;
};

Expansion expand(const Corpus& corpus, const std::set<PaperId>& frontier,
                 const std::set<PaperId>& visited, Phase direction) {
    Expansion result;
    for (const PaperId& paper : frontier) {
        const auto& neighbors = direction == Phase::Backward ? corpus.graph().references(paper)
                                                             : corpus.graph().citers(paper);
        for (const PaperId& neighbor : neighbors) {
            if (visited.count(neighbor) > 0 || !result.found.insert(neighbor).second) continue;
            if (direction == Phase::Backward) {
                result.edges.emplace_back(paper, neighbor);
            } else {
                result.edges.emplace_back(neighbor, paper);
            }
        }
    }
    return result;
}

IterationRecord make_record(int index, Phase phase, std::set<PaperId> new_visited,
                            std::set<PaperId> new_selected, std::size_t accum_visited,
                            std::size_t accum_selected, std::size_t oracle_size) {
    IterationRecord record;
    record.index = index;
    record.phase = phase;
    record.new_visited = std::move(new_visited);
    record.new_selected = std::move(new_selected);
    record.accum_visited = accum_visited;
    record.accum_selected = accum_selected;
    record.metrics = compute_metrics(accum_selected, accum_visited, oracle_size);
    return record;
}

struct DirectionalRun {
    std::set<PaperId> visited;
    std::set<PaperId> selected;
    std::vector<IterationRecord> records;
    std::vector<Edge> traversal_edges;
    bool cap_exceeded = false;
    int last_index = 0;
};

/// One direction iterated to fixpoint: stops when a step selects nothing or
/// the iteration cap is reached with frontier papers left to expand.
DirectionalRun run_direction(const Corpus& corpus, const std::set<PaperId>& oracle,
                             std::set<PaperId> frontier, std::set<PaperId> visited,
                             std::set<PaperId> selected, Phase direction, int first_index,
                             int max_iterations) {
    DirectionalRun run;
    run.visited = std::move(visited);
    run.selected = std::move(selected);
    run.last_index = first_index - 1;

    int iterations_done = 0;
    while (!frontier.empty()) {
        if (iterations_done == max_iterations) {
            run.cap_exceeded = true;
            break;
        }
        ++iterations_done;
        const int index = first_index + iterations_done - 1;
        run.last_index = index;

        Expansion step = expand(corpus, frontier, run.visited, direction);
        std::set<PaperId> newly_selected = intersect(step.found, oracle);
        run.visited.insert(step.found.begin(), step.found.end());
        run.selected.insert(newly_selected.begin(), newly_selected.end());
        run.traversal_edges.insert(run.traversal_edges.end(), step.edges.begin(),
                                   step.edges.end());
        run.records.push_back(make_record(index, direction, std::move(step.found),
                                          newly_selected, run.visited.size(),
                                          run.selected.size(), oracle.size()));
        frontier = std::move(newly_selected);
    }
    return run;
}

struct IterativeRun {
    std::set<PaperId> visited;
    std::set<PaperId> selected;
    std::vector<IterationRecord> records;
    std::vector<Edge> traversal_edges;
    bool cap_exceeded = false;
};

IterativeRun run_iterative(const Corpus& corpus, const std::set<PaperId>& oracle,
                           std::set<PaperId> frontier, std::set<PaperId> visited,
                           std::set<PaperId> selected, int max_iterations) {
    IterativeRun run;
    run.visited = std::move(visited);
    run.selected = std::move(selected);

    int iteration = 0;
    while (!frontier.empty()) {
        if (iteration == max_iterations) {
            run.cap_exceeded = true;
            break;
        }
        ++iteration;

        // Both directions expand against the same pre-iteration state; only
        // the union advances it.
        Expansion backward = expand(corpus, frontier, run.visited, Phase::Backward);
        Expansion forward = expand(corpus, frontier, run.visited, Phase::Forward);

        run.records.push_back(make_record(
            iteration, Phase::Backward, backward.found, intersect(backward.found, oracle),
            run.visited.size() + backward.found.size(),
            run.selected.size() + intersect(backward.found, oracle).size(), oracle.size()));
        run.records.push_back(make_record(
            iteration, Phase::Forward, forward.found, intersect(forward.found, oracle),
            run.visited.size() + forward.found.size(),
            run.selected.size() + intersect(forward.found, oracle).size(), oracle.size()));

        std::set<PaperId> step_visited = backward.found;
        step_visited.insert(forward.found.begin(), forward.found.end());
        std::set<PaperId> newly_selected = intersect(step_visited, oracle);

        run.visited.insert(step_visited.begin(), step_visited.end());
        run.selected.insert(newly_selected.begin(), newly_selected.end());
        run.records.push_back(make_record(iteration, Phase::Union, std::move(step_visited),
                                          newly_selected, run.visited.size(),
                                          run.selected.size(), oracle.size()));

        // One discovery edge per paper: forward edges whose paper was already
        // discovered backward in this iteration are dropped.
        run.traversal_edges.insert(run.traversal_edges.end(), backward.edges.begin(),
                                   backward.edges.end());
        for (const Edge& edge : forward.edges) {
            if (backward.found.count(edge.first) == 0) run.traversal_edges.push_back(edge);
        }

        frontier = std::move(newly_selected);
    }
    return run;
}

IterationRecord union_summary(int index, const std::set<PaperId>& visited,
                              const std::set<PaperId>& selected,
                              const std::set<PaperId>& seed_visited,
                              const std::set<PaperId>& seed_selected, std::size_t oracle_size) {
    return make_record(index, Phase::Union, minus(visited, seed_visited),
                       minus(selected, seed_selected), visited.size(), selected.size(),
                       oracle_size);
}

std::vector<Edge> dedup_edges(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

std::set<PaperId> backward_candidates(const Corpus& corpus, const std::set<PaperId>& frontier,
                                      const std::set<PaperId>& already_visited) {
    return expand(corpus, frontier, already_visited, Phase::Backward).found;
}

std::set<PaperId> forward_candidates(const Corpus& corpus, const std::set<PaperId>& frontier,
                                     const std::set<PaperId>& already_visited) {
    return expand(corpus, frontier, already_visited, Phase::Forward).found;
}

SnowballResult snowball(const Corpus& corpus, const std::set<PaperId>& seed_selected,
                        const std::set<PaperId>& seed_visited, SnowballMode mode,
                        int max_iterations) {
    const std::set<PaperId> oracle = corpus.oracle();
    if (oracle.empty()) {
        throw DomainError("corpus has no selected papers; simulations need an oracle");
    }
    if (!std::includes(oracle.begin(), oracle.end(), seed_selected.begin(),
                       seed_selected.end())) {
        throw DomainError("seed selection contains papers outside the oracle");
    }
    if (!std::includes(seed_visited.begin(), seed_visited.end(), seed_selected.begin(),
                       seed_selected.end())) {
        throw DomainError("seed selection contains papers outside the visited seed");
    }
    if (max_iterations < 1) throw DomainError("max_iterations must be positive");

    SnowballResult result;
    result.visited = seed_visited;
    result.selected = seed_selected;
    if (mode == SnowballMode::None || seed_selected.empty()) return result;

    switch (mode) {
        case SnowballMode::BsOnly:
        case SnowballMode::FsOnly: {
            const Phase direction =
                mode == SnowballMode::BsOnly ? Phase::Backward : Phase::Forward;
            DirectionalRun run = run_direction(corpus, oracle, seed_selected, seed_visited,
                                               seed_selected, direction, 1, max_iterations);
            result.visited = std::move(run.visited);
            result.selected = std::move(run.selected);
            result.records = std::move(run.records);
            result.traversal_edges = std::move(run.traversal_edges);
            result.cap_exceeded = run.cap_exceeded;
            break;
        }
        case SnowballMode::Parallel: {
            DirectionalRun bs = run_direction(corpus, oracle, seed_selected, seed_visited,
                                              seed_selected, Phase::Backward, 1, max_iterations);
            DirectionalRun fs = run_direction(corpus, oracle, seed_selected, seed_visited,
                                              seed_selected, Phase::Forward, 1, max_iterations);
            result.visited = bs.visited;
            result.visited.insert(fs.visited.begin(), fs.visited.end());
            result.selected = bs.selected;
            result.selected.insert(fs.selected.begin(), fs.selected.end());
            result.records = bs.records;
            result.records.insert(result.records.end(), fs.records.begin(), fs.records.end());
            result.records.push_back(union_summary(std::max(bs.last_index, fs.last_index),
                                                   result.visited, result.selected, seed_visited,
                                                   seed_selected, oracle.size()));
            result.traversal_edges = bs.traversal_edges;
            result.traversal_edges.insert(result.traversal_edges.end(),
                                          fs.traversal_edges.begin(), fs.traversal_edges.end());
            result.traversal_edges = dedup_edges(std::move(result.traversal_edges));
            result.cap_exceeded = bs.cap_exceeded || fs.cap_exceeded;
            break;
        }
        case SnowballMode::SeqBsThenFs:
        case SnowballMode::SeqFsThenBs: {
            const Phase first_dir =
                mode == SnowballMode::SeqBsThenFs ? Phase::Backward : Phase::Forward;
            const Phase second_dir =
                mode == SnowballMode::SeqBsThenFs ? Phase::Forward : Phase::Backward;
            DirectionalRun first = run_direction(corpus, oracle, seed_selected, seed_visited,
                                                 seed_selected, first_dir, 1, max_iterations);
            // The second direction starts from everything selected so far and
            // keeps the visited set; its own findings never feed back.
            DirectionalRun second =
                run_direction(corpus, oracle, first.selected, first.visited, first.selected,
                              second_dir, first.last_index + 1, max_iterations);
            result.visited = std::move(second.visited);
            result.selected = std::move(second.selected);
            result.records = std::move(first.records);
            result.records.insert(result.records.end(), second.records.begin(),
                                  second.records.end());
            result.records.push_back(union_summary(second.last_index, result.visited,
                                                   result.selected, seed_visited, seed_selected,
                                                   oracle.size()));
            result.traversal_edges = std::move(first.traversal_edges);
            result.traversal_edges.insert(result.traversal_edges.end(),
                                          second.traversal_edges.begin(),
                                          second.traversal_edges.end());
            result.cap_exceeded = first.cap_exceeded || second.cap_exceeded;
            break;
        }
        case SnowballMode::Iterative: {
            IterativeRun run = run_iterative(corpus, oracle, seed_selected, seed_visited,
                                             seed_selected, max_iterations);
            result.visited = std::move(run.visited);
            result.selected = std::move(run.selected);
            result.records = std::move(run.records);
            result.traversal_edges = std::move(run.traversal_edges);
            result.cap_exceeded = run.cap_exceeded;
            break;
        }
        case SnowballMode::None:
            break;
    }
    return result;
}

namespace {

struct Seed {
    std::set<PaperId> visited;
    std::set<PaperId> selected;
};

std::set<PaperId> returned_union(const Corpus& corpus, const std::set<SourceName>& sources) {
    for (const SourceName& source : sources) {
        if (!corpus.has_source(source)) throw UnknownSourceError(source);
    }
    std::set<PaperId> visited;
    for (const auto& [id, paper] : corpus.papers()) {
        for (const SourceName& source : sources) {
            if (paper.returned_by.count(source) > 0) {
                visited.insert(id);
                break;
            }
        }
    }
    return visited;
}

Seed resolve_seed(const Corpus& corpus, const StrategySpec& spec,
                  const std::set<PaperId>& oracle) {
    Seed seed;
    if (std::holds_alternative<SeedFromDbSelected>(spec.seed)) {
        if (spec.db_sources.empty()) {
            throw DomainError("a from-db-selected seed requires at least one db source");
        }
        seed.visited = returned_union(corpus, spec.db_sources);
    } else if (const auto* explicit_list = std::get_if<SeedExplicitList>(&spec.seed)) {
        for (const PaperId& id : explicit_list->ids) {
            if (corpus.find_paper(id) == nullptr) throw UnknownPaperError(id);
            seed.visited.insert(id);
        }
    } else {
        const auto& ranked = std::get<SeedRankedSource>(spec.seed);
        if (!corpus.has_source(ranked.source)) throw UnknownSourceError(ranked.source);
        if (ranked.cap < 1) throw DomainError("seed cap must be positive");
        for (const auto& [id, paper] : corpus.papers()) {
            if (paper.returned_by.count(ranked.source) == 0) continue;
            const auto rank = paper.ranks.find(ranked.source);
            if (rank == paper.ranks.end()) {
                throw MissingRanksError("paper '" + id + "' was returned by source '" +
                                        ranked.source + "' but carries no rank for it");
            }
            if (rank->second <= ranked.cap) seed.visited.insert(id);
        }
    }
    std::set_intersection(seed.visited.begin(), seed.visited.end(), oracle.begin(), oracle.end(),
                          std::inserter(seed.selected, seed.selected.begin()));
    return seed;
}

}  // namespace

StrategyOutcome db_search(const Corpus& corpus, const std::set<SourceName>& sources) {
    StrategySpec spec;
    spec.db_sources = sources;
    spec.seed = SeedFromDbSelected{};
    spec.mode = SnowballMode::None;
    if (sources.empty()) {
        // An empty search visits nothing; bypass the seed-rule check that
        // rejects from-db-selected specs without sources.
        spec.seed = SeedExplicitList{};
    }
    return run_strategy(corpus, spec);
}

StrategyOutcome run_strategy(const Corpus& corpus, const StrategySpec& spec) {
    const std::set<PaperId> oracle = corpus.oracle();
    if (oracle.empty()) {
        throw DomainError("corpus has no selected papers; simulations need an oracle");
    }

    const Seed seed = resolve_seed(corpus, spec, oracle);

    StrategyOutcome outcome;
    outcome.spec = spec;
    outcome.trace.push_back(make_record(0, Phase::Seed, seed.visited, seed.selected,
                                        seed.visited.size(), seed.selected.size(),
                                        oracle.size()));

    SnowballResult sb =
        snowball(corpus, seed.selected, seed.visited, spec.mode, spec.max_iterations);
    outcome.visited = std::move(sb.visited);
    outcome.selected = std::move(sb.selected);
    outcome.trace.insert(outcome.trace.end(), sb.records.begin(), sb.records.end());
    outcome.iteration_cap_exceeded = sb.cap_exceeded;
    outcome.traversal_edges = std::move(sb.traversal_edges);
    outcome.final_metrics =
        compute_metrics(outcome.selected.size(), outcome.visited.size(), oracle.size());
    return outcome;
}

Complementarity complementarity(const Corpus& corpus, const std::set<PaperId>& seed_selected,
                                const std::set<PaperId>& seed_visited) {
    SnowballResult bs =
        snowball(corpus, seed_selected, seed_visited, SnowballMode::BsOnly);
    SnowballResult fs =
        snowball(corpus, seed_selected, seed_visited, SnowballMode::FsOnly);

    Complementarity result;
    result.bs_selected = minus(bs.selected, seed_selected);
    result.fs_selected = minus(fs.selected, seed_selected);
    result.overlap = intersect(result.bs_selected, result.fs_selected);
    result.bs_only = minus(result.bs_selected, result.overlap);
    result.fs_only = minus(result.fs_selected, result.overlap);
    return result;
}

nlohmann::json metrics_to_json(const Metrics& metrics) {
    nlohmann::json j;
    j["precision"] =
        metrics.precision.has_value() ? nlohmann::json(round_half_up2(*metrics.precision))
                                      : nlohmann::json(nullptr);
    j["precision_nan"] = !metrics.precision.has_value();
    j["recall"] = round_half_up2(metrics.recall);
    j["f_measure"] = round_half_up2(metrics.f_measure);
    j["hits"] = metrics.hits;
    j["visited"] = metrics.visited;
    j["oracle_size"] = metrics.oracle_size;
    return j;
}

nlohmann::json trace_to_json(const std::vector<IterationRecord>& trace) {
    nlohmann::json rows = nlohmann::json::array();
    for (const IterationRecord& record : trace) {
        nlohmann::json row;
        row["index"] = record.index;
        row["phase"] = to_string(record.phase);
        row["new_visited"] = record.new_visited;
        row["new_selected"] = record.new_selected;
        row["accum_visited"] = record.accum_visited;
        row["accum_selected"] = record.accum_selected;
        row["metrics"] = metrics_to_json(record.metrics);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace slrsim
