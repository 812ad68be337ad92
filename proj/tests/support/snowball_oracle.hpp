#ifndef SLRSIM_TESTS_SNOWBALL_ORACLE_HPP
#define SLRSIM_TESTS_SNOWBALL_ORACLE_HPP

#include <deque>
#include <set>
#include <string>

#include "slrsim/corpus.hpp"
#include "slrsim/strategy.hpp"

// Brute-force reference implementation of every snowballing mode, written
// directly from the mode definitions with explicit worklists. It shares no
// code with the engine; tests compare final (visited, selected) sets.
namespace slrsim::testing::oracle {

struct Result {
    std::set<PaperId> visited;
    std::set<PaperId> selected;
};

// One direction iterated level by level: the worklist of a level holds the
// papers selected in the previous level; every neighbor is visited once;
// newly visited selected papers form the next level.
inline Result closure_one_direction(const Corpus& corpus, const std::set<PaperId>& seed_selected,
                                    const std::set<PaperId>& seed_visited, bool backward) {
    Result result{seed_visited, seed_selected};
    std::deque<PaperId> level(seed_selected.begin(), seed_selected.end());
    while (!level.empty()) {
        std::set<PaperId> newly_selected;
        for (const PaperId& paper : level) {
            const auto& neighbors =
                backward ? corpus.graph().references(paper) : corpus.graph().citers(paper);
            for (const PaperId& next : neighbors) {
                if (!result.visited.insert(next).second) continue;
                if (corpus.paper(next).selected) newly_selected.insert(next);
            }
        }
        result.selected.insert(newly_selected.begin(), newly_selected.end());
        level.assign(newly_selected.begin(), newly_selected.end());
    }
    return result;
}

inline Result iterative(const Corpus& corpus, const std::set<PaperId>& seed_selected,
                        const std::set<PaperId>& seed_visited) {
    Result result{seed_visited, seed_selected};
    std::deque<PaperId> level(seed_selected.begin(), seed_selected.end());
    while (!level.empty()) {
        std::set<PaperId> newly_selected;
        for (const PaperId& paper : level) {
            for (const bool backward : {true, false}) {
                const auto& neighbors =
                    backward ? corpus.graph().references(paper) : corpus.graph().citers(paper);
                for (const PaperId& next : neighbors) {
                    if (!result.visited.insert(next).second) continue;
                    if (corpus.paper(next).selected) newly_selected.insert(next);
                }
            }
        }
        result.selected.insert(newly_selected.begin(), newly_selected.end());
        level.assign(newly_selected.begin(), newly_selected.end());
    }
    return result;
}

inline Result parallel(const Corpus& corpus, const std::set<PaperId>& seed_selected,
                       const std::set<PaperId>& seed_visited) {
    const Result bs = closure_one_direction(corpus, seed_selected, seed_visited, true);
    const Result fs = closure_one_direction(corpus, seed_selected, seed_visited, false);
    Result result = bs;
    result.visited.insert(fs.visited.begin(), fs.visited.end());
    result.selected.insert(fs.selected.begin(), fs.selected.end());
    return result;
}

inline Result sequential(const Corpus& corpus, const std::set<PaperId>& seed_selected,
                         const std::set<PaperId>& seed_visited, bool backward_first) {
    const Result first =
        closure_one_direction(corpus, seed_selected, seed_visited, backward_first);
    // The second phase starts from everything selected so far.
    return closure_one_direction(corpus, first.selected, first.visited, !backward_first);
}

inline Result run(const Corpus& corpus, SnowballMode mode,
                  const std::set<PaperId>& seed_selected,
                  const std::set<PaperId>& seed_visited) {
    switch (mode) {
        case SnowballMode::Iterative: return iterative(corpus, seed_selected, seed_visited);
        case SnowballMode::Parallel: return parallel(corpus, seed_selected, seed_visited);
        case SnowballMode::SeqBsThenFs:
            return sequential(corpus, seed_selected, seed_visited, true);
        case SnowballMode::SeqFsThenBs:
            return sequential(corpus, seed_selected, seed_visited, false);
        case SnowballMode::BsOnly:
            return closure_one_direction(corpus, seed_selected, seed_visited, true);
        case SnowballMode::FsOnly:
            return closure_one_direction(corpus, seed_selected, seed_visited, false);
        case SnowballMode::None: break;
    }
    return {seed_visited, seed_selected};
}

}  // namespace slrsim::testing::oracle

#endif  // SLRSIM_TESTS_SNOWBALL_ORACLE_HPP
