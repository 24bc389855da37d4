#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercover/bits.hpp"

namespace hypercover {

inline constexpr int kMaxVertices = 16;

long long binom(int n, int k);

// A set of vertices as a bitmask over labels 0..n-1.
using VertexSet = std::uint32_t;

struct Triple {
    int a, b, c;  // a < b < c
};

// colex rank of the sorted triple a<b<c: C(c,3)+C(b,2)+a
int triple_index(int a, int b, int c, int n);
Triple triple_unindex(int t, int n);

int pair_index(int a, int b);  // colex rank C(b,2)+a for a<b

// Per-n lookup tables shared by all graphs of that order. Immutable after
// construction.
struct TripleTable {
    int n;
    int num_triples;
    std::vector<Triple> triples;                 // index -> triple
    std::array<EdgeBits, kMaxVertices> vertex_mask{};  // triples containing v
    std::vector<EdgeBits> pair_mask;             // triples containing both of a pair

    static const TripleTable& get(int n);
};

// 3-uniform hypergraph on n labelled vertices, edges stored as a bitset over
// colex-indexed triples. Value type; immutable sharing is safe.
class ThreeGraph {
public:
    ThreeGraph() : n_(0) {}
    explicit ThreeGraph(int n);
    ThreeGraph(int n, const std::vector<Triple>& edges);

    static ThreeGraph complete(int n);
    static ThreeGraph from_bits(int n, const EdgeBits& bits);

    int n() const { return n_; }
    int num_triples() const { return TripleTable::get(n_).num_triples; }
    const EdgeBits& bits() const { return bits_; }

    bool has_edge(int a, int b, int c) const;
    bool has_edge_index(int t) const { return bits_.test(t); }
    void add_edge(int a, int b, int c);
    void remove_edge(int a, int b, int c);
    void add_edge_index(int t) { bits_.set(t); }
    void remove_edge_index(int t) { bits_.reset(t); }

    int edge_count() const { return bits_.count(); }
    std::vector<Triple> edges() const;

    // degree of an i-set, i in {1,2}
    int degree(VertexSet s) const;
    int degree1(int v) const;
    int codegree(int u, int v) const;
    int min_degree(int i) const;

    class TwoGraph link_graph(int u) const;
    ThreeGraph induced(VertexSet s) const;

    friend bool operator==(const ThreeGraph&, const ThreeGraph&) = default;

private:
    int n_;
    EdgeBits bits_;
};

// Simple graph on n labelled vertices, adjacency rows as bitmasks.
// Used for link graphs and the 2-graph subroutines.
class TwoGraph {
public:
    TwoGraph() : n_(0) {}
    explicit TwoGraph(int n);

    static TwoGraph complete(int n);
    // book graph B_t: t pages amalgamated along one common edge (n = t+2);
    // book_minus drops the common edge
    static TwoGraph book(int pages);
    static TwoGraph book_minus(int pages);
    static TwoGraph cycle(int n);

    int n() const { return n_; }
    bool has_edge(int a, int b) const { return (adj_[a] >> b) & 1; }
    void add_edge(int a, int b);
    void remove_edge(int a, int b);
    std::uint32_t row(int v) const { return adj_[v]; }
    int degree(int v) const;
    int min_degree() const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const TwoGraph&, const TwoGraph&) = default;

private:
    int n_;
    std::array<std::uint32_t, 32> adj_{};
};

struct invalid_argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require(bool cond, const std::string& msg);

}  // namespace hypercover
