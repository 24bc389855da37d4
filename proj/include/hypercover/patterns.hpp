#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercover/three_graph.hpp"

namespace hypercover {

// ---- 2-graph subroutines ----

// True iff h has k pairwise disjoint edges avoiding the vertices in `avoid`.
bool has_matching(const TwoGraph& h, int k, VertexSet avoid = 0);

struct MatchingResult {
    int size;
    std::vector<std::pair<int, int>> edges;
};

// Exact maximum matching for general graphs (subset DP, n <= 20).
MatchingResult max_matching(const TwoGraph& h);

// max{C(2k-1,2), C(n,2)-C(n-k+1,2)}; the Erdos-Gallai edge bound for
// graphs with no k-matching. Requires n >= 2k-1 >= 1.
long long erdos_gallai_bound(int n, int k);

// Exact length of the longest cycle, 0 if acyclic. Exhaustive DFS.
int longest_cycle_length(const TwoGraph& h);

enum class BookClass { Book, BookMinus, NotApplicable };

// For n >= 7, min degree >= 2 and no 3-matching, every graph is a book
// B_{n-2} or B_{n-2} minus its common edge; anything else in that regime is
// an internal inconsistency.
BookClass classify_no3matching(const TwoGraph& h);

// ---- rooted patterns ----

struct Pattern {
    int m = 0;
    std::vector<Triple> edges;
    int root = 0;
};

Pattern generalized_triangle(int root);  // roots: 4 = T1, 2 = T2, 0 = T3
Pattern star_pattern(int k, int root);   // root 0 = center, 1 = leaf
Pattern path_pattern(int k, int root);   // vertices 0..2k, edges {2i,2i+1,2i+2}

// One representative root per orbit of the pattern's automorphism group.
std::vector<int> root_orbit_representatives(const Pattern& p);

std::optional<std::vector<int>> find_rooted_embedding(const ThreeGraph& g,
                                                      const Pattern& p, int u);

// ---- specialized detectors ----

struct TrianglePositions {
    bool t1 = false, t2 = false, t3 = false;
    bool any() const { return t1 || t2 || t3; }
};

TrianglePositions covers_T(const ThreeGraph& g, int u);
bool covers_P2_center(const ThreeGraph& g, int u);
bool covers_Sk_center(const ThreeGraph& g, int u, int k);
bool covers_Sk(const ThreeGraph& g, int u, int k);
bool covers_Pk(const ThreeGraph& g, int u, int k);
bool covers_P3_position2(const ThreeGraph& g, int u);

// ---- named patterns and coverage reports ----

// Accepted names: T, T1, T2, T3, P2, P2c, P3, P3pos2, Pk:<k>, Sk:<k>, Skc:<k>
bool is_known_pattern(const std::string& name);
bool vertex_covered(const ThreeGraph& g, int u, const std::string& name);

// The rooted patterns whose disjunction defines coverage under `name`.
std::vector<Pattern> patterns_for_name(const std::string& name);

struct CoverReport {
    std::vector<std::vector<std::string>> labels;  // per-vertex satisfied labels
    std::vector<int> uncovered;
};

CoverReport has_F_covering(const ThreeGraph& g, const std::string& name);
CoverReport has_F_covering(const ThreeGraph& g, const Pattern& custom);

}  // namespace hypercover
