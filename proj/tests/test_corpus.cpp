#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "slrsim/corpus.hpp"
#include "support/corpus_gen.hpp"

using namespace slrsim;

TEST_CASE("normalize_title applies the stated rules", "[corpus]") {
    CHECK(normalize_title("") == "");
    CHECK(normalize_title("A Systematic  Review: on the use of DoD!") ==
          "a systematic review on the use of dod");
    CHECK(normalize_title("Café-Based Search") == "cafe based search");
    CHECK(normalize_title("  leading and trailing\t ") == "leading and trailing");
    CHECK(normalize_title("ALL CAPS 2019") == "all caps 2019");
    CHECK(normalize_title("Größe & Straße") == "grosse strasse");
    CHECK(normalize_title("Łukasz's Œuvre") == "lukasz s oeuvre");
    CHECK(normalize_title("---") == "");
    CHECK(normalize_title("a\xFF\xFE" "b") == "a b");  // invalid UTF-8 separates
}

TEST_CASE("normalize_title is idempotent on generated inputs", "[corpus][property]") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> len(0, 40);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int round = 0; round < 500; ++round) {
        std::string input;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) input.push_back(static_cast<char>(byte(rng)));
        const std::string once = normalize_title(input);
        CHECK(normalize_title(once) == once);
    }
}

TEST_CASE("register_paper deduplicates by normalized title and year", "[corpus]") {
    Corpus corpus;

    Paper first;
    first.title = "A Study of Things";
    first.year = 2015;
    const auto r1 = corpus.register_paper(first);
    CHECK_FALSE(r1.was_duplicate);

    SECTION("same title twice returns the same id") {
        const auto r2 = corpus.register_paper(first);
        CHECK(r2.was_duplicate);
        CHECK(r2.id == r1.id);
        CHECK(corpus.papers().size() == 1);
    }

    SECTION("punctuation and case differences still collide") {
        Paper variant;
        variant.title = "a study: of THINGS!";
        variant.year = 2015;
        const auto r2 = corpus.register_paper(variant);
        CHECK(r2.was_duplicate);
        CHECK(r2.id == r1.id);
    }

    SECTION("different known years make distinct papers") {
        Paper other;
        other.title = "A Study of Things";
        other.year = 2016;
        const auto r2 = corpus.register_paper(other);
        CHECK_FALSE(r2.was_duplicate);
        CHECK(r2.id != r1.id);
        CHECK(corpus.papers().size() == 2);
    }

    SECTION("an unknown year matches any year") {
        Paper other;
        other.title = "A Study of Things";
        const auto r2 = corpus.register_paper(other);
        CHECK(r2.was_duplicate);
        CHECK(r2.id == r1.id);
    }

    SECTION("empty title is rejected") {
        Paper bad;
        CHECK_THROWS_AS(corpus.register_paper(bad), EmptyTitleError);
    }
}

TEST_CASE("register_paper merges provenance", "[corpus]") {
    Corpus corpus;
    corpus.add_source({"Scopus", SourceKind::IndexDatabase});
    corpus.add_source({"ACM", SourceKind::PublisherLibrary});

    Paper first;
    first.title = "Merge Target";
    first.returned_by = {"Scopus"};
    first.ranks = {{"Scopus", 7}};
    first.indexed_in = {{"Scopus", IndexEvidence::Unknown}};
    const auto id = corpus.register_paper(first).id;

    Paper second;
    second.title = "Merge Target";
    second.selected = true;
    second.returned_by = {"ACM", "Scopus"};
    second.ranks = {{"Scopus", 3}};
    second.indexed_in = {{"Scopus", IndexEvidence::Yes}, {"ACM", IndexEvidence::No}};
    CHECK(corpus.register_paper(second).was_duplicate);

    const Paper& merged = corpus.paper(id);
    CHECK(merged.returned_by == std::set<SourceName>{"ACM", "Scopus"});
    CHECK(merged.ranks.at("Scopus") == 3);  // min rank wins
    CHECK(merged.indexed_in.at("Scopus") == IndexEvidence::Yes);
    CHECK(merged.indexed_in.at("ACM") == IndexEvidence::No);
    CHECK(merged.selected);  // selected is sticky

    SECTION("selected never flips back") {
        Paper third;
        third.title = "Merge Target";
        third.selected = false;
        corpus.register_paper(third);
        CHECK(corpus.paper(id).selected);
    }

    SECTION("yes/no index evidence conflicts are rejected") {
        Paper conflicting;
        conflicting.title = "Merge Target";
        conflicting.indexed_in = {{"ACM", IndexEvidence::Yes}};
        CHECK_THROWS_AS(corpus.register_paper(conflicting), ConflictingIndexEvidenceError);
    }
}

TEST_CASE("register_paper fills missing metadata without overwriting", "[corpus]") {
    Corpus corpus;
    Paper first;
    first.title = "Metadata Test";
    first.authors = {"A. Author"};
    const auto id = corpus.register_paper(first).id;

    Paper second;
    second.title = "Metadata Test";
    second.year = 2018;
    second.venue = "EASE";
    second.authors = {"Someone Else"};
    corpus.register_paper(second);

    const Paper& merged = corpus.paper(id);
    CHECK(merged.year == 2018);
    CHECK(merged.venue == "EASE");
    CHECK(merged.authors == std::vector<std::string>{"A. Author"});
}

TEST_CASE("add_citation keeps set semantics", "[corpus]") {
    Corpus corpus;
    Paper a;
    a.title = "Alpha";
    const auto id_a = corpus.register_paper(a).id;
    Paper b;
    b.title = "Beta";
    const auto id_b = corpus.register_paper(b).id;

    corpus.add_citation(id_a, id_b);
    corpus.add_citation(id_a, id_b);
    CHECK(corpus.graph().edge_count() == 1);
    CHECK(corpus.graph().references(id_a) == std::set<PaperId>{id_b});
    CHECK(corpus.graph().citers(id_b) == std::set<PaperId>{id_a});

    SECTION("self-citations are rejected") {
        CHECK_THROWS_AS(corpus.add_citation(id_a, id_a), SelfCitationError);
    }

    SECTION("unknown cited paper becomes a stub") {
        corpus.add_citation(id_a, "ghost");
        const Paper& stub = corpus.paper("ghost");
        CHECK(stub.stub);
        CHECK_FALSE(stub.selected);
        CHECK(stub.returned_by.empty());
    }

    SECTION("stub creation can be disabled") {
        CHECK_THROWS_AS(corpus.add_citation(id_a, "ghost", false), UnknownPaperError);
    }

    SECTION("unknown citing paper is always an error") {
        CHECK_THROWS_AS(corpus.add_citation("ghost", id_a), UnknownPaperError);
    }
}

TEST_CASE("validate reports invariant violations", "[corpus]") {
    Corpus corpus;
    corpus.add_source({"Scopus", SourceKind::IndexDatabase});

    SECTION("a well-formed corpus yields no diagnostics") {
        Paper good;
        good.title = "Fine Paper";
        good.selected = true;
        good.returned_by = {"Scopus"};
        corpus.register_paper(good);
        CHECK(corpus.validate().empty());
    }

    SECTION("returned but marked not indexed") {
        Paper bad;
        bad.id = "bad";
        bad.title = "Contradiction";
        bad.selected = true;
        bad.returned_by = {"Scopus"};
        bad.indexed_in = {{"Scopus", IndexEvidence::No}};
        corpus.insert_paper_exact(bad);
        const auto diags = corpus.validate();
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].severity == Severity::Error);
        CHECK(diags[0].code == "index-conflict");
        CHECK(diags[0].message.find("bad") != std::string::npos);
        CHECK(diags[0].message.find("Scopus") != std::string::npos);
    }

    SECTION("edge to a missing paper") {
        Paper good;
        good.id = "ok";
        good.title = "Fine Paper";
        good.selected = true;
        good.returned_by = {"Scopus"};
        corpus.insert_paper_exact(good);
        corpus.graph().add_edge("ok", "missing");
        const auto diags = corpus.validate();
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == "edge-missing-endpoint");
    }

    SECTION("empty oracle blocks simulation") {
        Paper unselected;
        unselected.title = "Nothing Selected";
        corpus.register_paper(unselected);
        const auto diags = corpus.validate();
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == "empty-oracle");
    }

    SECTION("rank without matching query hit") {
        Paper bad;
        bad.id = "r";
        bad.title = "Ranked But Not Returned";
        bad.selected = true;
        bad.indexed_in = {{"Scopus", IndexEvidence::Yes}};
        bad.ranks = {{"Scopus", 2}};
        corpus.insert_paper_exact(bad);
        const auto diags = corpus.validate();
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == "rank-without-return");
    }

    SECTION("selected paper without any provenance is a warning") {
        Paper lonely;
        lonely.id = "l";
        lonely.title = "Unexplained Selection";
        lonely.selected = true;
        corpus.insert_paper_exact(lonely);
        const auto diags = corpus.validate();
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].severity == Severity::Warning);
        CHECK(diags[0].code == "no-provenance");
    }

    SECTION("undeclared duplicate pair") {
        Paper one;
        one.id = "d1";
        one.title = "Same Study";
        one.selected = true;
        one.returned_by = {"Scopus"};
        corpus.insert_paper_exact(one);
        Paper two;
        two.id = "d2";
        two.title = "Same   Study";
        corpus.insert_paper_exact(two);
        const auto diags = corpus.validate();
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == "duplicate-key");
    }
}

TEST_CASE("neighbor lookups agree with the edge set", "[corpus][property]") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        const Corpus corpus = testing::make_random_corpus(seed);
        std::size_t counted = 0;
        for (const auto& [citing, cited] : corpus.graph().edges()) {
            CHECK(corpus.graph().references(citing).count(cited) == 1);
            CHECK(corpus.graph().citers(cited).count(citing) == 1);
            CHECK(corpus.graph().has_edge(citing, cited));
            ++counted;
        }
        CHECK(counted == corpus.graph().edge_count());
        // and the reverse direction: every in-neighbor is a real edge
        for (const auto& [id, paper] : corpus.papers()) {
            (void)paper;
            for (const auto& citer : corpus.graph().citers(id)) {
                CHECK(corpus.graph().references(citer).count(id) == 1);
            }
        }
    }
}

TEST_CASE("merging never shrinks provenance", "[corpus][property]") {
    Corpus corpus;
    corpus.add_source({"S1", SourceKind::IndexDatabase});
    corpus.add_source({"S2", SourceKind::PublisherLibrary});

    Paper rich;
    rich.title = "Sticky Provenance";
    rich.selected = true;
    rich.returned_by = {"S1", "S2"};
    const auto id = corpus.register_paper(rich).id;

    Paper sparse;
    sparse.title = "Sticky Provenance";
    corpus.register_paper(sparse);  // empty provenance, unselected

    const Paper& merged = corpus.paper(id);
    CHECK(merged.returned_by == std::set<SourceName>{"S1", "S2"});
    CHECK(merged.selected);
}

TEST_CASE("registration is idempotent over record sequences", "[corpus][property]") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> title_pick(1, 6);
        std::uniform_int_distribution<int> year_pick(0, 3);
        std::uniform_int_distribution<int> source_pick(0, 2);

        // A small pool of colliding titles and years exercises the merge path.
        std::vector<Paper> records;
        for (int i = 0; i < 25; ++i) {
            Paper record;
            record.title = "Title " + std::to_string(title_pick(rng));
            const int year = year_pick(rng);
            if (year != 0) record.year = 2014 + year;
            record.selected = (i % 3) == 0;
            if (source_pick(rng) != 0) record.returned_by.insert("S1");
            records.push_back(record);
        }

        const auto build = [&records](int times) {
            Corpus corpus;
            corpus.add_source({"S1", SourceKind::IndexDatabase});
            for (int t = 0; t < times; ++t) {
                for (const Paper& record : records) corpus.register_paper(record);
            }
            return corpus;
        };
        CHECK(build(1) == build(2));
    }
}
