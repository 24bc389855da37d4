#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypercover/three_graph.hpp"

namespace hypercover {

struct SearchLimits {
    long long max_nodes = 500'000'000;
    double max_seconds = 600.0;
};

enum class OutcomeKind { Value, Witness, Exhausted, BudgetExceeded };

std::string to_string(OutcomeKind k);

struct SearchStats {
    long long nodes = 0;
    long long graphs = 0;
    double seconds = 0.0;
    std::uint64_t seed = 0;
};

struct SearchOutcome {
    OutcomeKind kind = OutcomeKind::Exhausted;
    int value = -1;                       // Value outcomes
    std::optional<ThreeGraph> witness;    // Value and Witness outcomes
    int uncovered_vertex = -1;
    SearchStats stats;
    std::string note;
};

struct EnumerationResult {
    long long visited = 0;
    bool completed = true;
};

// Visits every labelled 3-graph on n vertices (n <= 6), or one representative
// per isomorphism class (n <= 7). The visitor returns false to stop early.
EnumerationResult enumerate_threegraphs(
    int n, bool isomorph_rejection,
    const std::function<bool(const ThreeGraph&)>& visitor,
    long long budget = -1);

// Exact c_i(n,F) by full labelled enumeration; n <= 6. Shards the index space
// deterministically; num_threads = 0 picks the hardware default.
SearchOutcome compute_threshold_exact(int n, const std::string& pattern, int i,
                                      int num_threads = 0);

// Pruned DFS for an n-vertex graph with min i-degree >= d whose vertex 0 is
// not covered by the pattern. Exhausted outcomes are nonexistence proofs.
SearchOutcome find_witness(int n, const std::string& pattern, int i, int d,
                           SearchLimits limits = {});

// Seeded sampling; with a target (i,d) a repair loop raises the minimum
// i-degree to d by adding, among triples covering a deficient i-set, the one
// covering the most deficient i-sets (ties by colex rank).
ThreeGraph random_threegraph(int n, std::optional<std::pair<int, int>> target,
                             std::uint64_t seed, double density = 0.5);

struct TheoremInfo {
    std::string id;
    std::string claim;
    int i = 1;
    int min_n = 5;
    bool uses_k = false;
    // degree floor delta_i >= floor(n,k) expressing the hypothesis
    std::function<long long(int, int)> floor;
    // the conclusion, per vertex
    std::function<bool(const ThreeGraph&, int, int)> covered;
};

const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo& theorem_by_id(const std::string& id);

struct AuditReport {
    std::string theorem_id;
    int n = 0, k = 0, i = 0;
    long long degree_floor = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    double density = 0.5;
    long long violations = 0;
    std::vector<std::string> counterexamples;  // serialized graphs, capped
};

AuditReport audit_theorem(const std::string& theorem_id, int n, int k,
                          int samples, std::uint64_t seed);

struct SgBtReport {
    int n = 0;
    long long total = 0;
    long long applicable = 0;  // min degree >= 2 and no 3-matching
    long long books = 0;
    long long books_minus = 0;
    long long exceptions = 0;
};

// Exhaustive classification of every 2-graph on n vertices.
SgBtReport audit_sgbt_exhaustive(int n);

struct ErdosGallaiReport {
    int max_n = 0;
    long long checked = 0;
    long long violations = 0;
};

// Every 2-graph on 2..max_n vertices, k in {2,3} where n >= 2k-1.
ErdosGallaiReport audit_erdos_gallai_exhaustive(int max_n);

TwoGraph two_graph_from_mask(int n, std::uint64_t mask);

}  // namespace hypercover
