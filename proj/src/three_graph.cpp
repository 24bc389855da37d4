#include "hypercover/three_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

namespace hypercover {

void require(bool cond, const std::string& msg) {
    if (!cond) throw invalid_argument_error(msg);
}

long long binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

int triple_index(int a, int b, int c, int n) {
    int x[3] = {a, b, c};
    std::sort(x, x + 3);
    require(x[0] >= 0 && x[2] < n && x[0] != x[1] && x[1] != x[2],
            "triple_index: vertices must be distinct and in [0,n)");
    return int(binom(x[2], 3) + binom(x[1], 2) + x[0]);
}

Triple triple_unindex(int t, int n) {
    require(t >= 0 && t < binom(n, 3), "triple_unindex: index out of range");
    int c = 2;
    while (binom(c + 1, 3) <= t) ++c;
    t -= int(binom(c, 3));
    int b = 1;
    while (binom(b + 1, 2) <= t) ++b;
    t -= int(binom(b, 2));
    return Triple{t, b, c};
}

int pair_index(int a, int b) {
    if (a > b) std::swap(a, b);
    return int(binom(b, 2)) + a;
}

const TripleTable& TripleTable::get(int n) {
    static std::mutex mu;
    static std::map<int, TripleTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    TripleTable tab;
    tab.n = n;
    tab.num_triples = int(binom(n, 3));
    tab.triples.resize(tab.num_triples);
    tab.pair_mask.resize(binom(n, 2));
    int t = 0;
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a, ++t) {
                tab.triples[t] = Triple{a, b, c};
                tab.vertex_mask[a].set(t);
                tab.vertex_mask[b].set(t);
                tab.vertex_mask[c].set(t);
                tab.pair_mask[pair_index(a, b)].set(t);
                tab.pair_mask[pair_index(a, c)].set(t);
                tab.pair_mask[pair_index(b, c)].set(t);
            }
    return cache.emplace(n, std::move(tab)).first->second;
}

ThreeGraph::ThreeGraph(int n) : n_(n) {
    require(n >= 0 && n <= kMaxVertices, "ThreeGraph: n must be in [0,16]");
}

ThreeGraph::ThreeGraph(int n, const std::vector<Triple>& edges) : ThreeGraph(n) {
    for (const auto& e : edges) add_edge(e.a, e.b, e.c);
}

ThreeGraph ThreeGraph::complete(int n) {
    ThreeGraph g(n);
    for (int t = 0; t < g.num_triples(); ++t) g.bits_.set(t);
    return g;
}

ThreeGraph ThreeGraph::from_bits(int n, const EdgeBits& bits) {
    ThreeGraph g(n);
    g.bits_ = bits;
    return g;
}

bool ThreeGraph::has_edge(int a, int b, int c) const {
    return bits_.test(triple_index(a, b, c, n_));
}

void ThreeGraph::add_edge(int a, int b, int c) {
    bits_.set(triple_index(a, b, c, n_));
}

void ThreeGraph::remove_edge(int a, int b, int c) {
    bits_.reset(triple_index(a, b, c, n_));
}

std::vector<Triple> ThreeGraph::edges() const {
    const auto& tab = TripleTable::get(n_);
    std::vector<Triple> out;
    bits_.for_each([&](int t) { out.push_back(tab.triples[t]); });
    return out;
}

int ThreeGraph::degree1(int v) const {
    return bits_.and_count(TripleTable::get(n_).vertex_mask[v]);
}

int ThreeGraph::codegree(int u, int v) const {
    return bits_.and_count(TripleTable::get(n_).pair_mask[pair_index(u, v)]);
}

int ThreeGraph::degree(VertexSet s) const {
    int k = std::popcount(s);
    require(k == 1 || k == 2, "degree: |S| must be 1 or 2");
    require((s >> n_) == 0, "degree: vertex out of range");
    int a = std::countr_zero(s);
    if (k == 1) return degree1(a);
    int b = std::countr_zero(s & (s - 1));
    return codegree(a, b);
}

int ThreeGraph::min_degree(int i) const {
    require(i == 1 || i == 2, "min_degree: i must be 1 or 2");
    if (bits_.none()) return 0;
    int best = -1;
    if (i == 1) {
        for (int v = 0; v < n_; ++v) {
            int d = degree1(v);
            if (best < 0 || d < best) best = d;
        }
    } else {
        for (int b = 1; b < n_; ++b)
            for (int a = 0; a < b; ++a) {
                int d = codegree(a, b);
                if (best < 0 || d < best) best = d;
                if (best == 0) return 0;
            }
    }
    return best < 0 ? 0 : best;
}

TwoGraph ThreeGraph::link_graph(int u) const {
    require(u >= 0 && u < n_, "link_graph: vertex out of range");
    TwoGraph h(n_);
    const auto& tab = TripleTable::get(n_);
    EdgeBits sel = bits_;
    for (int i = 0; i < EdgeBits::kWords; ++i)
        sel.w[i] &= tab.vertex_mask[u].w[i];
    sel.for_each([&](int t) {
        const Triple& tr = tab.triples[t];
        int p[2], k = 0;
        for (int v : {tr.a, tr.b, tr.c})
            if (v != u) p[k++] = v;
        h.add_edge(p[0], p[1]);
    });
    return h;
}

ThreeGraph ThreeGraph::induced(VertexSet s) const {
    require((s >> n_) == 0, "induced: S not a subset of the vertex range");
    std::array<int, kMaxVertices> relabel{};
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if ((s >> v) & 1) relabel[v] = m++;
    ThreeGraph g(m);
    const auto& tab = TripleTable::get(n_);
    bits_.for_each([&](int t) {
        const Triple& tr = tab.triples[t];
        if (((s >> tr.a) & 1) && ((s >> tr.b) & 1) && ((s >> tr.c) & 1))
            g.add_edge(relabel[tr.a], relabel[tr.b], relabel[tr.c]);
    });
    return g;
}

TwoGraph::TwoGraph(int n) : n_(n) {
    require(n >= 0 && n <= 31, "TwoGraph: n must be in [0,31]");
}

TwoGraph TwoGraph::complete(int n) {
    TwoGraph g(n);
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) g.add_edge(a, b);
    return g;
}

TwoGraph TwoGraph::book(int pages) {
    TwoGraph g = book_minus(pages);
    g.add_edge(0, 1);
    return g;
}

TwoGraph TwoGraph::book_minus(int pages) {
    require(pages >= 1, "book: needs at least one page");
    TwoGraph g(pages + 2);
    for (int p = 0; p < pages; ++p) {
        g.add_edge(0, p + 2);
        g.add_edge(1, p + 2);
    }
    return g;
}

TwoGraph TwoGraph::cycle(int n) {
    require(n >= 3, "cycle: n must be at least 3");
    TwoGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

void TwoGraph::add_edge(int a, int b) {
    require(a != b && a >= 0 && b >= 0 && a < n_ && b < n_,
            "TwoGraph::add_edge: bad endpoints");
    adj_[a] |= 1u << b;
    adj_[b] |= 1u << a;
}

void TwoGraph::remove_edge(int a, int b) {
    adj_[a] &= ~(1u << b);
    adj_[b] &= ~(1u << a);
}

int TwoGraph::degree(int v) const { return std::popcount(adj_[v]); }

int TwoGraph::min_degree() const {
    int best = n_ ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

int TwoGraph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

std::vector<std::pair<int, int>> TwoGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (has_edge(a, b)) out.emplace_back(a, b);
    return out;
}

}  // namespace hypercover
