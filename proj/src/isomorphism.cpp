#include "hypercover/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace hypercover {

ThreeGraph relabel(const ThreeGraph& g, const std::vector<int>& perm) {
    ThreeGraph h(g.n());
    for (const auto& e : g.edges())
        h.add_edge(perm[e.a], perm[e.b], perm[e.c]);
    return h;
}

namespace {

// Invariant preserved by isomorphism: degree plus the sorted multiset of
// codegrees with every other vertex.
std::vector<std::vector<int>> vertex_invariants(const ThreeGraph& g) {
    int n = g.n();
    std::vector<std::vector<int>> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> cods;
        for (int u = 0; u < n; ++u)
            if (u != v) cods.push_back(g.codegree(u, v));
        std::sort(cods.begin(), cods.end());
        cods.insert(cods.begin(), g.degree1(v));
        inv[v] = std::move(cods);
    }
    return inv;
}

struct CanonSearch {
    const ThreeGraph& g;
    int n;
    std::vector<int> label_class;   // class id required for each new label
    std::vector<std::vector<int>> classes;  // class id -> original vertices
    std::vector<int> assigned;      // new label k -> original vertex
    std::vector<bool> used;
    EdgeBits cur;
    EdgeBits best;
    bool best_valid = false;

    explicit CanonSearch(const ThreeGraph& graph) : g(graph), n(graph.n()) {
        auto inv = vertex_invariants(g);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return inv[a] < inv[b]; });
        for (int idx = 0; idx < n; ++idx) {
            int v = order[idx];
            if (idx == 0 || inv[v] != inv[order[idx - 1]]) classes.push_back({});
            classes.back().push_back(v);
            label_class.push_back(int(classes.size()) - 1);
        }
        assigned.assign(n, -1);
        used.assign(n, false);
    }

    // Compares bits of cur vs best over triple indices [0,hi).
    // -1 cur smaller, 0 equal, +1 cur larger. Bit value 0 sorts first.
    int compare_prefix(int hi) const {
        for (int t = 0; t < hi; ++t) {
            bool c = cur.test(t), b = best.test(t);
            if (c != b) return c ? 1 : -1;
        }
        return 0;
    }

    void run(int k) {
        if (k == n) {
            if (!best_valid || compare_prefix(int(binom(n, 3))) < 0) {
                best = cur;
                best_valid = true;
            }
            return;
        }
        int lo = int(binom(k, 3)), hi = int(binom(k + 1, 3));
        for (int v : classes[label_class[k]]) {
            if (used[v]) continue;
            used[v] = true;
            assigned[k] = v;
            int t = lo;
            for (int j = 1; j < k; ++j)
                for (int i = 0; i < j; ++i, ++t)
                    if (g.has_edge(assigned[i], assigned[j], v))
                        cur.set(t);
                    else
                        cur.reset(t);
            // best may have shrunk since the ancestors compared, so always
            // compare the full prefix against the current best
            if (!best_valid || compare_prefix(hi) <= 0) run(k + 1);
            used[v] = false;
        }
    }
};

}  // namespace

ThreeGraph canonical_form(const ThreeGraph& g) {
    if (g.n() <= 1) return g;
    CanonSearch s(g);
    s.run(0);
    return ThreeGraph::from_bits(g.n(), s.best);
}

bool is_isomorphic(const ThreeGraph& g, const ThreeGraph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    auto a = vertex_invariants(g), b = vertex_invariants(h);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    return canonical_form(g).bits() == canonical_form(h).bits();
}

bool is_isomorphic_bruteforce(const ThreeGraph& g, const ThreeGraph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(g, perm) == h) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool is_isomorphic_two(const TwoGraph& g, const TwoGraph& h) {
    int n = g.n();
    if (n != h.n() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < n; ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n && ok; ++b)
                if (g.has_edge(a, b) != h.has_edge(perm[a], perm[b])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace hypercover
