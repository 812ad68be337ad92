#include <catch2/catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "slrsim/report.hpp"
#include "support/dot_checker.hpp"
#include "support/fixtures.hpp"

using namespace slrsim;
using slrsim::testing::make_five_paper_corpus;
namespace dot = slrsim::testing::dot;

namespace {

report::Table sample_table() {
    report::Table table;
    table.title = "Sample";
    table.columns = {"Source", "Precision"};
    table.rows.push_back({std::string("Scopus"),
                          report::PercentCell{100.0 * 7 / 15, Ratio{7, 15}}});
    return table;
}

}  // namespace

TEST_CASE("csv rendering follows RFC 4180", "[report]") {
    report::Table table;
    table.columns = {"name", "value"};

    SECTION("empty table is header-only") {
        CHECK(report::render_table(table, report::RenderFormat::Csv) == "name,value\r\n");
    }

    SECTION("quoting kicks in for commas, quotes and newlines") {
        table.rows.push_back({std::string("a,b"), std::string("say \"hi\"")});
        table.rows.push_back({std::string("line\nbreak"), std::int64_t{7}});
        CHECK(report::render_table(table, report::RenderFormat::Csv) ==
              "name,value\r\n"
              "\"a,b\",\"say \"\"hi\"\"\"\r\n"
              "\"line\nbreak\",7\r\n");
    }
}

TEST_CASE("markdown rendering uses the percent-with-fraction style", "[report]") {
    const std::string text =
        report::render_table(sample_table(), report::RenderFormat::Markdown);
    CHECK(text.find("46.67 (7/15)") != std::string::npos);
    CHECK(text.find("| Source | Precision |") != std::string::npos);
}

TEST_CASE("NAN renders as the literal token", "[report]") {
    report::Table table;
    table.columns = {"Precision"};
    table.rows.push_back({report::PercentCell{std::nullopt, Ratio{0, 0}}});
    CHECK(report::render_table(table, report::RenderFormat::Markdown).find("NAN (0/0)") !=
          std::string::npos);

    const auto parsed = nlohmann::json::parse(
        report::render_table(table, report::RenderFormat::Json));
    CHECK(parsed["rows"][0][0]["percent"].is_null());
    CHECK(parsed["rows"][0][0]["nan"] == true);
}

TEST_CASE("renderers are deterministic", "[report]") {
    const auto table = sample_table();
    for (const auto format : {report::RenderFormat::Csv, report::RenderFormat::Markdown,
                              report::RenderFormat::Json}) {
        CHECK(report::render_table(table, format) == report::render_table(table, format));
    }
    CHECK_THROWS_AS(report::render_table(table, report::RenderFormat::Dot),
                    UnsupportedFormatError);
}

TEST_CASE("citation graph export", "[report]") {
    const Corpus corpus = make_five_paper_corpus();
    StrategySpec spec;
    spec.db_sources = {"Scopus"};
    spec.seed = SeedFromDbSelected{};
    spec.mode = SnowballMode::Parallel;
    const StrategyOutcome outcome = run_strategy(corpus, spec);

    const std::string text = report::render_citation_graph(corpus, outcome);
    const auto summary = dot::parse(text);
    REQUIRE(summary.has_value());
    CHECK(summary->nodes.size() == 5);
    CHECK(summary->edges.size() == 4);  // one discovery edge per snowballed paper

    CHECK(text.find("\"A\" [class=\"seed-selected\"") != std::string::npos);
    CHECK(text.find("\"B\" [class=\"snowball-selected\"") != std::string::npos);
    CHECK(text.find("\"D\" [class=\"visited-unselected\"") != std::string::npos);

    SECTION("rendering twice is byte-identical") {
        CHECK(report::render_citation_graph(corpus, outcome) == text);
    }

    SECTION("all-edges exports the induced subgraph") {
        const std::string full = report::render_citation_graph(corpus, outcome, true);
        const auto full_summary = dot::parse(full);
        REQUIRE(full_summary.has_value());
        CHECK(full_summary->edges.size() == 4);  // the fixture has exactly 4 edges
    }

    SECTION("a seed-only outcome has no edges") {
        StrategySpec none = spec;
        none.mode = SnowballMode::None;
        const auto seed_only = run_strategy(corpus, none);
        const auto seed_summary = dot::parse(report::render_citation_graph(corpus, seed_only));
        REQUIRE(seed_summary.has_value());
        CHECK(seed_summary->nodes.size() == 1);
        CHECK(seed_summary->edges.empty());
    }

    SECTION("stub papers get the stub class") {
        Corpus with_stub = corpus;
        with_stub.add_citation("A", "ghost");
        const auto run = run_strategy(with_stub, spec);
        const std::string stub_text = report::render_citation_graph(with_stub, run);
        CHECK(stub_text.find("\"ghost\" [class=\"stub\"") != std::string::npos);
        REQUIRE(dot::parse(stub_text).has_value());
    }
}

TEST_CASE("venn rendering", "[report]") {
    const Corpus corpus = make_five_paper_corpus();
    const Complementarity result = complementarity(corpus, {"A"}, {"A"});

    SECTION("json carries counts and memberships") {
        const auto parsed =
            nlohmann::json::parse(report::render_venn(result, report::RenderFormat::Json));
        CHECK(parsed["bs_only"]["count"] == 2);
        CHECK(parsed["overlap"]["count"] == 0);
        CHECK(parsed["fs_only"]["count"] == 1);
        CHECK(parsed["bs_only"]["ids"] == nlohmann::json::array({"B", "E"}));
        CHECK(parsed["fs_only"]["ids"] == nlohmann::json::array({"C"}));
    }

    SECTION("all-empty result renders zeros") {
        const auto parsed = nlohmann::json::parse(
            report::render_venn(Complementarity{}, report::RenderFormat::Json));
        CHECK(parsed["bs_only"]["count"] == 0);
        CHECK(parsed["overlap"]["count"] == 0);
        CHECK(parsed["fs_only"]["count"] == 0);
    }

    SECTION("markdown works and csv does not") {
        CHECK(report::render_venn(result, report::RenderFormat::Markdown).find("backward only") !=
              std::string::npos);
        CHECK_THROWS_AS(report::render_venn(result, report::RenderFormat::Csv),
                        UnsupportedFormatError);
    }
}
