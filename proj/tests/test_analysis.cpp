#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "indpoly/analysis.hpp"
#include "indpoly/census.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/plot.hpp"
#include "support.hpp"

using namespace indpoly;

TEST_CASE("analyze path(4)") {
    auto r = analyze_graph(path(4), "p4");
    CHECK(r.order == 4);
    CHECK(r.independence_number == 2);
    REQUIRE(r.M.has_value());
    CHECK(*r.M == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.verdict.strictly_log_concave);
    REQUIRE(r.roots.size() == 2);
    for (const auto& cr : r.roots) CHECK(cr.classification.strictly_in_sector());
    CHECK(r.counts.total == 2);
    CHECK(r.counts.outside_sector == 0);
    CHECK(r.well_covered == true);
}

TEST_CASE("analyze K1 and the empty graph") {
    auto r = analyze_graph(complete(1), "k1");
    CHECK(r.polynomial == IntPolynomial{1, 1});
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0].root.re == -1.0);
    CHECK(r.roots[0].classification.in_sector);

    auto e = analyze_graph(edgeless(0), "empty");
    CHECK(e.independence_number == 0);
    CHECK(e.roots.empty());
    CHECK_FALSE(e.M.has_value());
}

TEST_CASE("analyze the non-unimodal join") {
    Graph k2 = complete(2);
    Graph g = join(complete(25), disjoint_union(disjoint_union(k2, k2), disjoint_union(k2, k2)));
    auto r = analyze_graph(g, "K25+4K2");
    CHECK_FALSE(r.verdict.unimodal);
    CHECK_FALSE(r.verdict.log_concave);
    CHECK(total_multiplicity(std::vector<ComplexRoot>{}) == 0);
    int total = 0;
    for (const auto& cr : r.roots) total += cr.root.multiplicity;
    CHECK(total == r.independence_number);
}

TEST_CASE("analysis refuses graphs over the order cap") {
    AnalysisConfig cfg;
    cfg.max_order = 10;
    CHECK_THROWS_AS(analyze_graph(path(11), "big", cfg), RefusalError);
}

TEST_CASE("report counts agree with per-root flags") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        auto r = analyze_graph(indpoly::testing::random_graph(2 + rep % 9, rng), std::to_string(rep));
        int outside = 0, total = 0;
        for (const auto& cr : r.roots) {
            total += cr.root.multiplicity;
            if (cr.classification.strictly_outside_sector()) outside += cr.root.multiplicity;
        }
        CHECK(total == r.independence_number);
        CHECK(r.counts.total == total);
        CHECK(r.counts.outside_sector == outside);
    }
}

TEST_CASE("JSON report round-trips") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 30; ++rep) {
        auto r = analyze_graph(indpoly::testing::random_graph(1 + rep % 10, rng), "g" + std::to_string(rep));
        nlohmann::json j = r;
        auto back = nlohmann::json::parse(j.dump()).get<AnalysisReport>();
        CHECK(back == r);
    }
    nlohmann::json j = analyze_graph(path(4), "p4");
    CHECK(j["coefficients"] == nlohmann::json({"1", "4", "3"}));
    CHECK(j["roots"][0].contains("classification"));
}

TEST_CASE("roots CSV rows") {
    auto r = analyze_graph(complete(1), "k1");
    CHECK(roots_csv_rows(r) == "k1,-1,0,1,1,1,0,0\n");
    CHECK(std::string(kRootsCsvHeader) ==
          "graph_id,re,im,multiplicity,in_sector,outside_region,right_half_plane,boundary_flag");
}

TEST_CASE("empty corpus gives a zero summary") {
    std::istringstream in("");
    auto result = run_corpus(in, CorpusConfig{});
    CHECK(result.summary == CensusSummary{});
    CHECK(result.reports.empty());
}

TEST_CASE("corpus parse errors carry line numbers and do not stop the run") {
    std::istringstream in("A_\nnot graph6\n\nBw\n");
    auto result = run_corpus(in, CorpusConfig{});
    CHECK(result.summary.graphs_processed == 2);
    REQUIRE(result.failures.size() == 1);
    CHECK(result.failures[0].line == 2);
    CHECK(result.failures[0].kind == 2);
    CHECK(result.reports[1].graph_id == "4");

    std::istringstream again("A_\nnot graph6\nBw\n");
    CorpusConfig strict;
    strict.fail_fast = true;
    CHECK_THROWS_AS(run_corpus(again, strict), ParseError);
}

TEST_CASE("census is invariant under worker count and line order") {
    std::ifstream in(indpoly::testing::data_path("connected7.g6"));
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);

    auto run = [](const std::vector<std::string>& ls, unsigned jobs) {
        std::string text;
        for (const auto& l : ls) text += l + "\n";
        std::istringstream s(text);
        CorpusConfig cfg;
        cfg.jobs = jobs;
        return run_corpus(s, cfg);
    };
    auto serial = run(lines, 1);
    auto parallel = run(lines, 4);
    CHECK(serial.summary == parallel.summary);
    REQUIRE(serial.reports.size() == parallel.reports.size());
    for (std::size_t i = 0; i < serial.reports.size(); ++i) CHECK(serial.reports[i] == parallel.reports[i]);

    std::mt19937_64 rng(77);
    std::shuffle(lines.begin(), lines.end(), rng);
    CHECK(run(lines, 3).summary == serial.summary);
    CHECK(serial.summary.graphs_processed == 853);
}

TEST_CASE("no very well-covered graph of order <= 6 is non-unimodal") {
    auto result = run_corpus(indpoly::testing::data_path("graphs_le6.g6"), CorpusConfig{});
    CHECK(result.summary.graphs_processed == 208);
    CHECK(result.summary.very_well_covered_count > 0);
    CHECK(result.summary.very_well_covered_non_unimodal == 0);
}

TEST_CASE("SVG plot") {
    auto k1 = analyze_graph(complete(1), "k1");
    const std::string svg = render_svg({k1});
    std::size_t points = 0;
    for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1))
        ++points;
    CHECK(points == 1);
    CHECK(svg.find("<ellipse") != std::string::npos);
    CHECK(svg == render_svg({k1}));

    CHECK_THROWS_AS(render_svg({}), std::invalid_argument);
    CHECK_THROWS_AS(render_svg({analyze_graph(edgeless(0))}), std::invalid_argument);

    const auto dir = std::filesystem::temp_directory_path() / "indpoly_plot_test";
    std::filesystem::create_directories(dir);
    const auto file = dir / "k1.svg";
    emit_plot({k1}, file.string());
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == svg);
    CHECK_THROWS_AS(emit_plot({k1}, (dir / "missing" / "x.svg").string()), std::runtime_error);
}

TEST_CASE("K1 plots at (-1, 0)") {
    // The viewport spans [-1, 0.5 + r] horizontally before padding; -1 maps to the left pad.
    auto k1 = analyze_graph(complete(1), "k1");
    PlotConfig cfg;
    cfg.margin = 0.0;
    const std::string svg = render_svg({k1}, cfg);
    CHECK(svg.find("<circle cx=\"0.000\"") != std::string::npos);
}
