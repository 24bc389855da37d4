#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypercover/constructions.hpp"
#include "hypercover/patterns.hpp"

using namespace hypercover;

namespace {

ThreeGraph random_graph(int n, std::mt19937_64& gen, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    ThreeGraph g(n);
    int t = TripleTable::get(n).num_triples;
    for (int e = 0; e < t; ++e)
        if (coin(gen)) g.add_edge_index(e);
    return g;
}

TwoGraph random_two(int n, std::mt19937_64& gen, double density = 0.5) {
    std::bernoulli_distribution coin(density);
    TwoGraph h(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(gen)) h.add_edge(a, b);
    return h;
}

// independent maximum-matching oracle: plain choose/skip recursion on the
// edge list
int brute_matching(const std::vector<std::pair<int, int>>& edges,
                   std::size_t idx, std::uint32_t used) {
    if (idx == edges.size()) return 0;
    int best = brute_matching(edges, idx + 1, used);
    auto [a, b] = edges[idx];
    if (!((used >> a) & 1) && !((used >> b) & 1))
        best = std::max(best, 1 + brute_matching(edges, idx + 1,
                                                 used | (1u << a) | (1u << b)));
    return best;
}

int brute_matching(const TwoGraph& h) { return brute_matching(h.edges(), 0, 0); }

TwoGraph from_mask(int n, std::uint64_t mask) {
    TwoGraph h(n);
    int e = 0;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a, ++e)
            if ((mask >> e) & 1) h.add_edge(a, b);
    return h;
}

}  // namespace

TEST_CASE("max matching on fixed graphs") {
    CHECK(max_matching(TwoGraph::cycle(5)).size == 2);
    CHECK(max_matching(TwoGraph::book(5)).size == 2);
    TwoGraph three_edges(6);
    three_edges.add_edge(0, 1);
    three_edges.add_edge(2, 3);
    three_edges.add_edge(4, 5);
    CHECK(max_matching(three_edges).size == 3);
}

TEST_CASE("max matching witness is a valid matching") {
    std::mt19937_64 gen(3);
    for (int rep = 0; rep < 500; ++rep) {
        TwoGraph h = random_two(4 + static_cast<int>(gen() % 5), gen);
        MatchingResult m = max_matching(h);
        CHECK(static_cast<int>(m.edges.size()) == m.size);
        std::uint32_t used = 0;
        for (auto [a, b] : m.edges) {
            CHECK(h.has_edge(a, b));
            CHECK(((used >> a) & 1) == 0);
            CHECK(((used >> b) & 1) == 0);
            used |= (1u << a) | (1u << b);
        }
    }
}

TEST_CASE("max matching agrees with brute force: all graphs on 6 vertices") {
    for (std::uint64_t mask = 0; mask < (1u << 15); ++mask) {
        TwoGraph h = from_mask(6, mask);
        CHECK(max_matching(h).size == brute_matching(h));
    }
}

TEST_CASE("max matching agrees with brute force: sampled graphs") {
    std::mt19937_64 gen(5);
    for (int rep = 0; rep < 10000; ++rep) {
        int n = 7 + static_cast<int>(gen() % 3);
        TwoGraph h = random_two(n, gen, 0.25);  // sparse, around <= 10 edges
        CHECK(max_matching(h).size == brute_matching(h));
        CHECK(has_matching(h, 2) == (brute_matching(h) >= 2));
    }
}

TEST_CASE("matching with avoided vertices") {
    TwoGraph h(6);
    h.add_edge(0, 1);
    h.add_edge(2, 3);
    h.add_edge(4, 5);
    CHECK(has_matching(h, 3));
    CHECK(has_matching(h, 2, (1u << 0)));
    CHECK(!has_matching(h, 3, (1u << 0)));
}

TEST_CASE("edge bound for graphs without a k-matching") {
    CHECK(erdos_gallai_bound(7, 3) == 11);
    CHECK(erdos_gallai_bound(5, 1) == 0);
    CHECK(erdos_gallai_bound(9, 2) == 8);
    CHECK_THROWS_AS(erdos_gallai_bound(4, 3), invalid_argument_error);
}

TEST_CASE("edge bound holds exhaustively on 6 vertices") {
    for (std::uint64_t mask = 0; mask < (1u << 15); ++mask) {
        TwoGraph h = from_mask(6, mask);
        int mm = max_matching(h).size;
        for (int k = 2; k <= 3; ++k)
            if (6 >= 2 * k - 1 && mm < k)
                CHECK(h.edge_count() <= erdos_gallai_bound(6, k));
    }
}

TEST_CASE("longest cycle") {
    CHECK(longest_cycle_length(TwoGraph::cycle(5)) == 5);
    TwoGraph tree(6);  // a path
    for (int v = 0; v + 1 < 6; ++v) tree.add_edge(v, v + 1);
    CHECK(longest_cycle_length(tree) == 0);
    // spine u-p1-v-p2-u through two pages is a 4-cycle
    CHECK(longest_cycle_length(TwoGraph::book(5)) == 4);
}

TEST_CASE("minimum degree forces a long cycle") {
    std::mt19937_64 gen(9);
    for (int rep = 0; rep < 10000; ++rep) {
        int n = 5 + static_cast<int>(gen() % 5);
        TwoGraph h = random_two(n, gen);
        int d = h.min_degree();
        if (d >= 2) CHECK(longest_cycle_length(h) >= d + 1);
    }
}

TEST_CASE("book classification") {
    CHECK(classify_no3matching(TwoGraph::book(5)) == BookClass::Book);
    CHECK(classify_no3matching(TwoGraph::book_minus(5)) == BookClass::BookMinus);
    CHECK(classify_no3matching(TwoGraph::complete(7)) ==
          BookClass::NotApplicable);
    CHECK(classify_no3matching(TwoGraph::cycle(5)) == BookClass::NotApplicable);
}

TEST_CASE("pattern root orbits") {
    auto t_orbits = root_orbit_representatives(generalized_triangle(0));
    CHECK(t_orbits == std::vector<int>{0, 2, 4});
    auto p3_orbits = root_orbit_representatives(path_pattern(3, 0));
    // end-pair vertices, joints, and the middle vertex, up to reflection
    CHECK(p3_orbits.size() == 3);
    auto s3_orbits = root_orbit_representatives(star_pattern(3, 0));
    CHECK(s3_orbits == std::vector<int>{0, 1});  // center and leaf
}

TEST_CASE("triangle positions on fixed graphs") {
    ThreeGraph k5 = ThreeGraph::complete(5);
    for (int u = 0; u < 5; ++u) {
        auto pos = covers_T(k5, u);
        CHECK(pos.t1);
        CHECK(pos.t2);
        CHECK(pos.t3);
    }
    Construction g2 = build({2, 0, 4});
    CHECK(!covers_T(g2.graph, *g2.apex).any());
    Construction g3 = build({3, 12, 0});
    CHECK(!covers_T(g3.graph, *g3.apex).any());
}

TEST_CASE("path and star detectors on fixed graphs") {
    Construction g5 = build({5, 8, 0});
    CHECK(!covers_P2_center(g5.graph, *g5.apex));
    Construction g6 = build({6, 9, 0});
    CHECK(!covers_Sk_center(g6.graph, *g6.apex, 3));
    ThreeGraph k7 = ThreeGraph::complete(7);
    CHECK(covers_Sk_center(k7, 0, 3));
    CHECK(covers_Sk(k7, 0, 3));
    Construction g7 = build({7, 8, 0});
    CHECK(!covers_Pk(g7.graph, *g7.apex, 3));
    CHECK(!covers_P3_position2(g7.graph, *g7.apex));
    ThreeGraph k8 = ThreeGraph::complete(8);
    CHECK(covers_P3_position2(k8, 0));
    ThreeGraph k9 = ThreeGraph::complete(9);
    CHECK(covers_Pk(k9, 0, 4));
}

namespace {

// named detector vs the generic rooted-embedding oracle
void check_against_oracle(const ThreeGraph& g, const std::string& name) {
    auto pats = patterns_for_name(name);
    for (int u = 0; u < g.n(); ++u) {
        bool oracle = false;
        for (const auto& p : pats)
            if (find_rooted_embedding(g, p, u)) {
                oracle = true;
                break;
            }
        CAPTURE(name);
        CAPTURE(u);
        CHECK(vertex_covered(g, u, name) == oracle);
    }
}

}  // namespace

TEST_CASE("detectors match the oracle on every 5-vertex graph") {
    for (std::uint64_t idx = 0; idx < 1024; ++idx) {
        EdgeBits bits;
        bits.w[0] = idx;
        ThreeGraph g = ThreeGraph::from_bits(5, bits);
        for (const char* name : {"T", "T1", "T2", "T3", "P2", "P2c", "Sk:2",
                                 "Skc:2"})
            check_against_oracle(g, name);
    }
}

TEST_CASE("detectors match the oracle on sampled graphs") {
    std::mt19937_64 gen(21);
    for (int rep = 0; rep < 2000; ++rep) {
        int n = 6 + static_cast<int>(gen() % 4);  // 6..9
        ThreeGraph g = random_graph(n, gen, 0.15 + 0.1 * (gen() % 8));
        check_against_oracle(g, "T");
        check_against_oracle(g, "P2");
        check_against_oracle(g, "P2c");
        if (n >= 7) {
            check_against_oracle(g, "P3");
            check_against_oracle(g, "Sk:3");
            check_against_oracle(g, "Skc:3");
        }
        if (n >= 8) check_against_oracle(g, "P3pos2");
    }
}

TEST_CASE("adding edges never uncovers a vertex") {
    std::mt19937_64 gen(23);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 6 + static_cast<int>(gen() % 3);
        ThreeGraph g = random_graph(n, gen, 0.3);
        ThreeGraph bigger = g;
        int t = TripleTable::get(n).num_triples;
        for (int tries = 0; tries < 6; ++tries)
            bigger.add_edge_index(static_cast<int>(gen() % t));
        for (int u = 0; u < n; ++u) {
            auto before = covers_T(g, u), after = covers_T(bigger, u);
            CHECK((!before.t1 || after.t1));
            CHECK((!before.t2 || after.t2));
            CHECK((!before.t3 || after.t3));
            if (covers_P2_center(g, u)) CHECK(covers_P2_center(bigger, u));
            if (n >= 7 && covers_Pk(g, u, 3)) CHECK(covers_Pk(bigger, u, 3));
        }
    }
}

TEST_CASE("cover reports") {
    // two disjoint complete blocks on 4 vertices: a 2-path needs 5 vertices
    // in one component, so nothing is covered
    Construction g4 = build({4, 8, 0});
    auto rep = has_F_covering(g4.graph, "P2");
    CHECK(rep.uncovered == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    auto rep2 = has_F_covering(ThreeGraph::complete(5), "T");
    CHECK(rep2.uncovered.empty());
    for (int u = 0; u < 5; ++u)
        CHECK(rep2.labels[u] == std::vector<std::string>{"T1", "T2", "T3"});
    Construction g1 = build({1, 7, 0});
    auto rep3 = has_F_covering(g1.graph, "T");
    CHECK(std::find(rep3.uncovered.begin(), rep3.uncovered.end(), 0) !=
          rep3.uncovered.end());
}

TEST_CASE("unknown pattern names are rejected") {
    CHECK(is_known_pattern("Pk:4"));
    CHECK(!is_known_pattern("Pk:9"));
    CHECK(!is_known_pattern("Q"));
    CHECK_THROWS_AS(vertex_covered(ThreeGraph::complete(5), 0, "Q"),
                    invalid_argument_error);
}
