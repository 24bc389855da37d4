#pragma once

#include <vector>

#include "hypercover/three_graph.hpp"

namespace hypercover {

// Canonical relabelling: canonical_form(G) == canonical_form(H) iff G and H
// are isomorphic. Exact backtracking over degree/codegree-refined vertex
// classes; intended for desk scale (n <= 16, easy instances).
ThreeGraph canonical_form(const ThreeGraph& g);

bool is_isomorphic(const ThreeGraph& g, const ThreeGraph& h);

// Applies a permutation: vertex v of g becomes perm[v] in the result.
ThreeGraph relabel(const ThreeGraph& g, const std::vector<int>& perm);

// Brute-force oracle over all n! permutations; test use only.
bool is_isomorphic_bruteforce(const ThreeGraph& g, const ThreeGraph& h);

bool is_isomorphic_two(const TwoGraph& g, const TwoGraph& h);

}  // namespace hypercover
