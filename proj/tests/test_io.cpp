#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "hypercover/constructions.hpp"
#include "hypercover/io.hpp"

using namespace hypercover;

namespace {

GraphFile parse_str(const std::string& s) {
    std::istringstream in(s);
    return parse_graph(in);
}

}  // namespace

TEST_CASE("parse a small graph") {
    GraphFile gf = parse_str(
        "c a sample\n"
        "p h3 5 2\n"
        "e 0 1 2\n"
        "e 2 3 4\n");
    CHECK(gf.graph.n() == 5);
    CHECK(gf.graph.edge_count() == 2);
    CHECK(gf.graph.has_edge(0, 1, 2));
    CHECK(gf.graph.has_edge(2, 3, 4));
    CHECK(gf.comments == std::vector<std::string>{"a sample"});
}

TEST_CASE("format emits colex-sorted edges and round-trips") {
    std::mt19937_64 gen(31);
    std::bernoulli_distribution coin(0.4);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 4 + static_cast<int>(gen() % 8);
        ThreeGraph g(n);
        int t = TripleTable::get(n).num_triples;
        for (int e = 0; e < t; ++e)
            if (coin(gen)) g.add_edge_index(e);
        std::string text = format_graph(g);
        GraphFile back = parse_str(text);
        CHECK(back.graph == g);
        CHECK(format_graph(back.graph) == text);  // bit-exact round trip
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_str("e 0 1 2\n"), ParseError);  // edge before header
    try {
        parse_str("p h3 5 2\ne 0 1 2\ne 0 1 2\n");
        FAIL("duplicate edge accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    try {
        parse_str("p h3 5 1\ne 0 1 5\n");
        FAIL("out-of-range vertex accepted");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_str("p h3 5 2\ne 0 1 2\n"), ParseError);  // count
    CHECK_THROWS_AS(parse_str("p h3 5 1\ne 0 1 1\n"), ParseError);  // repeated
    CHECK_THROWS_AS(parse_str("p h2 5 0\n"), ParseError);  // wrong format tag
}

TEST_CASE("metadata comments and pattern roots") {
    GraphFile gf = parse_str(
        "p h3 6 1\n"
        "c apex 0\n"
        "e 0 1 2\n"
        "c side-A 0 1 2\n");
    CHECK(gf.apex == 0);
    REQUIRE(gf.side_a.has_value());
    CHECK(*gf.side_a == 0b111u);

    GraphFile pat = parse_str(
        "p h3 5 2\n"
        "e 0 1 2\n"
        "e 2 3 4\n"
        "r 2\n");
    CHECK(pat.root == 2);
}

TEST_CASE("construction output round-trips through the text format") {
    for (auto [id, n, k] : {std::tuple{1, 6, 0}, {2, 0, 4}, {4, 8, 0},
                            {9, 12, 3}}) {
        Construction c = build({id, n, k});
        GraphFile back = parse_str(format_graph(c.graph));
        CHECK(back.graph == c.graph);
    }
}
