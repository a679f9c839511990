#include <doctest.h>

#include "odg/builders.hpp"
#include "odg/json_io.hpp"
#include "odg/solve.hpp"
#include "odg/svg.hpp"

#include <cstdio>
#include <fstream>

using namespace odg;
using namespace odg::build;
using namespace odg::io;

TEST_SUITE("io")
{
    TEST_CASE("graph json round trip")
    {
        OddGraph g = g306(ConstructionParams{8, 3, 8, 3, 7, 1});
        GraphFile back = graph_from_json(graph_to_json(g));
        CHECK(back.graph == g);
        CHECK(back.graph.d() == 23);
        CHECK(back.graph.allowed_lengths() == g.allowed_lengths());

        OddGraph h = make_h();
        CHECK(graph_from_json(graph_to_json(h)).graph == h);
    }

    TEST_CASE("rationals serialize as p/q strings")
    {
        std::string text = graph_to_json(make_t());
        CHECK(text.find("\"1/2\"") != std::string::npos);
        CHECK(text.find("\"format_version\": 1") != std::string::npos);
    }

    TEST_CASE("names survive the round trip")
    {
        OddGraph t = make_t();
        std::vector<std::string> names{"origin", "mid", "unit"};
        GraphFile back = graph_from_json(graph_to_json(t, names));
        CHECK(back.names == names);
        CHECK_THROWS_AS(graph_to_json(t, {"just-one"}), std::invalid_argument);
    }

    TEST_CASE("bad graph files are rejected")
    {
        CHECK_THROWS(graph_from_json("{}"));
        CHECK_THROWS_WITH_AS(
            graph_from_json(R"({"format_version": 1, "d": 12, "vertices": []})"),
            doctest::Contains("squarefree"), std::invalid_argument);
        CHECK_THROWS_AS(
            graph_from_json(R"({"format_version": 2, "d": 1, "vertices": []})"),
            std::invalid_argument);
        CHECK_THROWS(graph_from_json(R"({"format_version":1,"d":1,"vertices":[["0","0"]]})"));
    }

    TEST_CASE("file io")
    {
        std::string path = "/tmp/odg-test-graph.json";
        write_graph(rotor(8, 3), path);
        CHECK(read_graph(path).graph == rotor(8, 3));
        std::remove(path.c_str());
        CHECK_THROWS_AS(read_graph("/nonexistent/graph.json"), std::runtime_error);
    }

    TEST_CASE("coloring files")
    {
        ColoringFile c{3, {0, 1, 2, 0}};
        ColoringFile back = coloring_from_json(coloring_to_json(c));
        CHECK(back.k == 3);
        CHECK(back.colors == c.colors);
    }

    TEST_CASE("verification accepts exactly what validate accepts")
    {
        OddGraph f = frame(8, 3);
        chroma::ChiResult r = chroma::chi_exact(f);
        ColoringFile good{r.chi, r.witness};
        ColoringFile reread = coloring_from_json(coloring_to_json(good));
        CHECK(chroma::validate(f, reread.colors, reread.k) ==
              chroma::validate(f, r.witness, r.chi));
        ColoringFile bad = good;
        bad.colors[0] = bad.colors[1]; // break one edge... if adjacent
        CHECK(chroma::validate(f, bad.colors, bad.k) ==
              chroma::validate(f, coloring_from_json(coloring_to_json(bad)).colors, bad.k));
    }

    TEST_CASE("svg output")
    {
        OddGraph f = frame(8, 3);
        chroma::Coloring coloring = chroma::chi_exact(f).witness;
        SvgOptions opts;
        std::string svg = render_svg(f, &coloring, opts);
        // deterministic: a second render is byte-identical
        CHECK(render_svg(f, &coloring, opts) == svg);
        // 9 circles, three fill colors in use
        CHECK(std::count(svg.begin(), svg.end(), '\n') > 9);
        std::size_t circles = 0;
        for (std::size_t at = svg.find("<circle"); at != std::string::npos;
             at = svg.find("<circle", at + 1))
            ++circles;
        CHECK(circles == 9);
        int fills = 0;
        for (const char * color : {"#e41a1c", "#377eb8", "#4daf4a"})
            if (svg.find(color) != std::string::npos)
                ++fills;
        CHECK(fills == 3);
        CHECK(svg.find("timestamp") == std::string::npos);
    }

    TEST_CASE("svg emphasis and edge filtering")
    {
        OddGraph f = frame(8, 3);
        SvgOptions opts;
        opts.emphasized = {0};
        std::string svg = render_svg(f, nullptr, opts);
        CHECK(svg.find("r=\"9.000\"") != std::string::npos); // 1.8x the default 5

        SvgOptions filter;
        filter.edge_lengths = std::set<long long>{3};
        std::string filtered = render_svg(f, nullptr, filter);
        std::size_t lines = 0;
        for (std::size_t at = filtered.find("<line"); at != std::string::npos;
             at = filtered.find("<line", at + 1))
            ++lines;
        CHECK(lines == 9);
    }

    TEST_CASE("invalid colorings are refused by the renderer")
    {
        OddGraph t = make_t();
        chroma::Coloring bad{0, 0, 1};
        CHECK_THROWS_AS(render_svg(t, &bad), std::invalid_argument);
        chroma::Coloring wrong_size{0, 1};
        CHECK_THROWS_AS(render_svg(t, &wrong_size), std::invalid_argument);
    }

    TEST_CASE("manifest files")
    {
        RunManifest m;
        m.command = "solve";
        m.parameters = "k=6";
        m.inputs = {"g306.json"};
        m.solver = "odg-sat {cnf}";
        m.timeout_seconds = 60;
        m.outcome = "sat";
        m.wall_seconds = 1.5;
        std::string path = "/tmp/odg-test-manifest.json";
        write_manifest(m, path);
        std::ifstream in(path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text.find("\"command\": \"solve\"") != std::string::npos);
        CHECK(text.find("\"outcome\": \"sat\"") != std::string::npos);
        std::remove(path.c_str());
    }
}
