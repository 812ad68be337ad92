#ifndef SLRSIM_TESTS_FIXTURES_HPP
#define SLRSIM_TESTS_FIXTURES_HPP

#include <string>

#include "slrsim/corpus.hpp"

namespace slrsim::testing {

// Five-paper fixture used across the strategy tests, hand-traced:
//   A cites B, B cites E, C cites A, D cites C
//   oracle = {A, B, C, E}; Scopus returns {A}
// Backward closure from {A} reaches B then E; forward closure reaches C then
// stops at D (unselected).
inline Corpus make_five_paper_corpus() {
    Corpus corpus;
    corpus.add_source({"Scopus", SourceKind::IndexDatabase});
    const auto add = [&corpus](const PaperId& id, bool selected, bool scopus) {
        Paper paper;
        paper.id = id;
        paper.title = "Paper " + id;
        paper.selected = selected;
        if (scopus) paper.returned_by.insert("Scopus");
        corpus.insert_paper_exact(std::move(paper));
    };
    add("A", true, true);
    add("B", true, false);
    add("C", true, false);
    add("D", false, false);
    add("E", true, false);
    corpus.graph().add_edge("A", "B");
    corpus.graph().add_edge("B", "E");
    corpus.graph().add_edge("C", "A");
    corpus.graph().add_edge("D", "C");
    return corpus;
}

}  // namespace slrsim::testing

#endif  // SLRSIM_TESTS_FIXTURES_HPP
