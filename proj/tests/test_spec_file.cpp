#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "slrsim/spec_file.hpp"
#include "support/fixtures.hpp"

using namespace slrsim;
using nlohmann::json;
using slrsim::testing::make_five_paper_corpus;

TEST_CASE("spec files parse and round-trip", "[spec-file]") {
    const auto doc = R"({
      "strategies": [
        {"name": "db", "db_sources": ["Scopus"], "seed": {"type": "from-db-selected"},
         "mode": "none"},
        {"name": "sb", "seed": {"type": "ranked", "source": "GS", "cap": 60},
         "mode": "iterative", "max_iterations": 10},
        {"name": "pin", "seed": {"type": "explicit", "ids": ["A", "B"]}, "mode": "parallel"}
      ]
    })"_json;

    const SpecFile file = spec_file_from_json(doc);
    REQUIRE(file.strategies.size() == 3);
    CHECK(file.strategies[0].name == "db");
    CHECK(file.strategies[0].mode == SnowballMode::None);
    CHECK(std::holds_alternative<SeedFromDbSelected>(file.strategies[0].seed));
    CHECK(file.strategies[1].max_iterations == 10);
    CHECK(std::get<SeedRankedSource>(file.strategies[1].seed).cap == 60);
    CHECK(std::get<SeedExplicitList>(file.strategies[2].seed).ids ==
          std::vector<PaperId>{"A", "B"});

    const SpecFile reparsed = spec_file_from_json(spec_file_to_json(file));
    CHECK(reparsed.strategies == file.strategies);
}

TEST_CASE("spec file schema errors", "[spec-file]") {
    const auto expect_error = [](const json& doc, const std::string& path) {
        try {
            spec_file_from_json(doc);
            FAIL("expected SpecFileError at " << path);
        } catch (const SpecFileError& error) {
            CHECK(error.path() == path);
        }
    };

    expect_error(json::object(), "/strategies");
    expect_error(R"({"strategies": [{"seed": {"type": "explicit", "ids": []}, "mode": "none"}]})"_json,
                 "/strategies/0/name");
    expect_error(R"({"strategies": [
        {"name": "a", "seed": {"type": "explicit", "ids": []}, "mode": "none"},
        {"name": "a", "seed": {"type": "explicit", "ids": []}, "mode": "none"}]})"_json,
                 "/strategies/1/name");
    expect_error(R"({"strategies": [{"name": "a", "seed": {"type": "explicit", "ids": []},
                                     "mode": "diagonal"}]})"_json,
                 "/strategies/0/mode");
    expect_error(R"({"strategies": [{"name": "a", "seed": {"type": "from-db-selected"},
                                     "mode": "none"}]})"_json,
                 "/strategies/0/db_sources");
    expect_error(R"({"strategies": [{"name": "a", "seed": {"type": "ranked", "source": "S",
                                     "cap": 0}, "mode": "none"}]})"_json,
                 "/strategies/0/seed/cap");
}

TEST_CASE("specs are checked against the corpus", "[spec-file]") {
    const Corpus corpus = make_five_paper_corpus();

    StrategySpec good;
    good.db_sources = {"Scopus"};
    good.seed = SeedFromDbSelected{};
    CHECK_NOTHROW(check_spec_against_corpus(good, corpus));

    StrategySpec bad = good;
    bad.db_sources = {"Nowhere"};
    CHECK_THROWS_AS(check_spec_against_corpus(bad, corpus), UnknownSourceError);

    StrategySpec ranked;
    ranked.seed = SeedRankedSource{"Nowhere", 60};
    CHECK_THROWS_AS(check_spec_against_corpus(ranked, corpus), UnknownSourceError);
}

TEST_CASE("presets expand against a corpus", "[spec-file]") {
    Corpus corpus;
    corpus.add_source({"Scopus", SourceKind::IndexDatabase});
    corpus.add_source({"Google Scholar", SourceKind::SearchEngine});
    corpus.add_source({"ACM", SourceKind::PublisherLibrary});
    Paper paper;
    paper.id = "p";
    paper.title = "P";
    paper.selected = true;
    paper.returned_by = {"Scopus"};
    corpus.insert_paper_exact(paper);

    const SpecFile file = preset_strategies(corpus);
    REQUIRE(file.strategies.size() == 7);
    CHECK(file.strategies[0].name == "db");
    CHECK(file.strategies[0].db_sources ==
          std::set<SourceName>{"ACM", "Google Scholar", "Scopus"});
    CHECK(file.strategies[1].name == "sb");
    CHECK(std::get<SeedRankedSource>(file.strategies[1].seed).source == "Google Scholar");
    CHECK(file.strategies[2].name == "db-full");
    CHECK(file.strategies[2].mode == SnowballMode::Iterative);
    CHECK(file.strategies[3].name == "scopus-iter");
    CHECK(file.strategies[3].db_sources == std::set<SourceName>{"Scopus"});
    CHECK(file.strategies[4].mode == SnowballMode::Parallel);
    CHECK(file.strategies[5].mode == SnowballMode::SeqBsThenFs);
    CHECK(file.strategies[6].mode == SnowballMode::SeqFsThenBs);

    SECTION("missing preset sources are domain errors") {
        Corpus no_scopus;
        no_scopus.add_source({"ACM", SourceKind::PublisherLibrary});
        CHECK_THROWS_AS(preset_strategies(no_scopus), UnknownSourceError);
    }
}
