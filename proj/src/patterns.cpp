#include "hypercover/patterns.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hypercover {

namespace {

bool has_matching_rec(const TwoGraph& h, int k, std::uint32_t avail) {
    if (k == 0) return true;
    while (avail) {
        int v = std::countr_zero(avail);
        std::uint32_t nb = h.row(v) & avail;
        if (nb) {
            // either match v with some neighbor, or leave v unmatched
            std::uint32_t rest = avail & ~(1u << v);
            std::uint32_t cand = nb;
            while (cand) {
                int w = std::countr_zero(cand);
                cand &= cand - 1;
                if (has_matching_rec(h, k - 1, rest & ~(1u << w))) return true;
            }
            return has_matching_rec(h, k, rest);
        }
        avail &= ~(1u << v);
    }
    return false;
}

}  // namespace

bool has_matching(const TwoGraph& h, int k, VertexSet avoid) {
    std::uint32_t avail = (h.n() >= 32 ? ~0u : (1u << h.n()) - 1) & ~avoid;
    return has_matching_rec(h, k, avail);
}

MatchingResult max_matching(const TwoGraph& h) {
    int n = h.n();
    require(n <= 20, "max_matching: n must be at most 20");
    std::vector<signed char> memo(std::size_t{1} << n, -1);
    auto rec = [&](auto&& self, std::uint32_t s) -> int {
        if (!s) return 0;
        signed char& m = memo[s];
        if (m >= 0) return m;
        int v = std::countr_zero(s);
        std::uint32_t rest = s & ~(1u << v);
        int best = self(self, rest);
        std::uint32_t nb = h.row(v) & rest;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            best = std::max(best, 1 + self(self, rest & ~(1u << w)));
        }
        return m = static_cast<signed char>(best);
    };
    std::uint32_t full = n ? (n >= 32 ? ~0u : (1u << n) - 1) : 0;
    MatchingResult out{rec(rec, full), {}};
    // walk the DP to recover a witness matching
    std::uint32_t s = full;
    int need = out.size;
    while (need > 0) {
        int v = std::countr_zero(s);
        std::uint32_t rest = s & ~(1u << v);
        if (rec(rec, rest) == need) {
            s = rest;
            continue;
        }
        std::uint32_t nb = h.row(v) & rest;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (1 + rec(rec, rest & ~(1u << w)) == need) {
                out.edges.emplace_back(v, w);
                s = rest & ~(1u << w);
                --need;
                break;
            }
        }
    }
    return out;
}

long long erdos_gallai_bound(int n, int k) {
    require(k >= 1 && n >= 2 * k - 1, "erdos_gallai_bound: needs n >= 2k-1 >= 1");
    return std::max(binom(2 * k - 1, 2), binom(n, 2) - binom(n - k + 1, 2));
}

namespace {

void longest_cycle_dfs(const TwoGraph& h, int start, int v, std::uint32_t visited,
                       int len, int& best) {
    std::uint32_t nb = h.row(v);
    if (len >= 3 && (nb >> start) & 1) best = std::max(best, len);
    nb &= ~visited;
    // only extend through vertices above the cycle minimum
    while (nb) {
        int w = std::countr_zero(nb);
        nb &= nb - 1;
        if (w <= start) continue;
        longest_cycle_dfs(h, start, w, visited | (1u << w), len + 1, best);
    }
}

}  // namespace

int longest_cycle_length(const TwoGraph& h) {
    int best = 0;
    for (int s = 0; s < h.n(); ++s)
        longest_cycle_dfs(h, s, s, 1u << s, 1, best);
    return best;
}

BookClass classify_no3matching(const TwoGraph& h) {
    int n = h.n();
    if (n < 7 || h.min_degree() < 2 || has_matching(h, 3))
        return BookClass::NotApplicable;
    std::uint32_t full = (1u << n) - 1;
    // hubs: the two vertices adjacent to every page
    std::vector<int> hubs, pages;
    for (int v = 0; v < n; ++v)
        (h.degree(v) > 2 ? hubs : pages).push_back(v);
    auto is_book_like = [&](bool common_edge) {
        if (hubs.size() != 2 || pages.size() != std::size_t(n - 2)) return false;
        int h1 = hubs[0], h2 = hubs[1];
        if (h.has_edge(h1, h2) != common_edge) return false;
        std::uint32_t expect = full & ~(1u << h1) & ~(1u << h2);
        if ((h.row(h1) & expect) != expect || (h.row(h2) & expect) != expect)
            return false;
        for (int p : pages)
            if (h.degree(p) != 2) return false;
        return true;
    };
    if (is_book_like(true)) return BookClass::Book;
    if (is_book_like(false)) return BookClass::BookMinus;
    throw std::logic_error(
        "classify_no3matching: graph in the applicable regime is neither a "
        "book nor a book minus its common edge");
}

Pattern generalized_triangle(int root) {
    return Pattern{5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}, root};
}

Pattern star_pattern(int k, int root) {
    require(k >= 1, "star_pattern: k must be positive");
    Pattern p;
    p.m = 2 * k + 1;
    for (int i = 0; i < k; ++i) p.edges.push_back({0, 2 * i + 1, 2 * i + 2});
    p.root = root;
    return p;
}

Pattern path_pattern(int k, int root) {
    require(k >= 1, "path_pattern: k must be positive");
    Pattern p;
    p.m = 2 * k + 1;
    for (int i = 0; i < k; ++i) p.edges.push_back({2 * i, 2 * i + 1, 2 * i + 2});
    p.root = root;
    return p;
}

namespace {

bool pattern_has_edge(const Pattern& p, int a, int b, int c) {
    int x[3] = {a, b, c};
    std::sort(x, x + 3);
    for (const auto& e : p.edges)
        if (e.a == x[0] && e.b == x[1] && e.c == x[2]) return true;
    return false;
}

void automorphism_search(const Pattern& p, std::vector<int>& map,
                         std::vector<bool>& used, int k,
                         std::vector<std::vector<int>>& autos) {
    if (k == p.m) {
        autos.push_back(map);
        return;
    }
    for (int img = 0; img < p.m; ++img) {
        if (used[img]) continue;
        map[k] = img;
        bool ok = true;
        for (const auto& e : p.edges) {
            if (map[e.a] < 0 || map[e.b] < 0 || map[e.c] < 0) continue;
            if (!pattern_has_edge(p, map[e.a], map[e.b], map[e.c])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            used[img] = true;
            automorphism_search(p, map, used, k + 1, autos);
            used[img] = false;
        }
        map[k] = -1;
    }
}

}  // namespace

std::vector<int> root_orbit_representatives(const Pattern& p) {
    std::vector<std::vector<int>> autos;
    std::vector<int> map(p.m, -1);
    std::vector<bool> used(p.m, false);
    automorphism_search(p, map, used, 0, autos);
    std::vector<int> orbit(p.m);
    std::iota(orbit.begin(), orbit.end(), 0);
    for (const auto& a : autos)
        for (int v = 0; v < p.m; ++v) {
            int ra = orbit[v], rb = orbit[a[v]];
            if (ra != rb)
                for (int& r : orbit)
                    if (r == std::max(ra, rb)) r = std::min(ra, rb);
        }
    std::vector<int> reps;
    for (int v = 0; v < p.m; ++v)
        if (orbit[v] == v) reps.push_back(v);
    return reps;
}

namespace {

struct EmbedSearch {
    const ThreeGraph& g;
    const Pattern& p;
    std::vector<int> order;       // pattern vertices in assignment order
    std::vector<int> pat_degree;  // pattern degree per pattern vertex
    std::vector<int> map;         // pattern vertex -> graph vertex or -1
    std::uint32_t used = 0;

    EmbedSearch(const ThreeGraph& graph, const Pattern& pat)
        : g(graph), p(pat), map(pat.m, -1) {
        pat_degree.assign(p.m, 0);
        for (const auto& e : p.edges)
            for (int v : {e.a, e.b, e.c}) ++pat_degree[v];
        order.push_back(p.root);
        std::vector<int> rest;
        for (int v = 0; v < p.m; ++v)
            if (v != p.root) rest.push_back(v);
        std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
            return pat_degree[a] > pat_degree[b];
        });
        // prefer vertices adjacent to already-ordered ones
        std::vector<int> connected_order;
        std::vector<bool> placed(p.m, false);
        placed[p.root] = true;
        while (!rest.empty()) {
            auto touches = [&](int v) {
                for (const auto& e : p.edges) {
                    int vs[3] = {e.a, e.b, e.c};
                    bool has_v = false, has_placed = false;
                    for (int x : vs) {
                        if (x == v) has_v = true;
                        if (placed[x]) has_placed = true;
                    }
                    if (has_v && has_placed) return true;
                }
                return false;
            };
            auto it = std::find_if(rest.begin(), rest.end(), touches);
            if (it == rest.end()) it = rest.begin();
            placed[*it] = true;
            connected_order.push_back(*it);
            rest.erase(it);
        }
        order.insert(order.end(), connected_order.begin(), connected_order.end());
    }

    bool consistent(int pv) const {
        for (const auto& e : p.edges) {
            if (e.a != pv && e.b != pv && e.c != pv) continue;
            if (map[e.a] < 0 || map[e.b] < 0 || map[e.c] < 0) continue;
            if (!g.has_edge(map[e.a], map[e.b], map[e.c])) return false;
        }
        return true;
    }

    bool run(std::size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        for (int cand = 0; cand < g.n(); ++cand) {
            if ((used >> cand) & 1) continue;
            if (g.degree1(cand) < pat_degree[pv]) continue;
            map[pv] = cand;
            used |= 1u << cand;
            if (consistent(pv) && run(depth + 1)) return true;
            used &= ~(1u << cand);
            map[pv] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_rooted_embedding(const ThreeGraph& g,
                                                      const Pattern& p, int u) {
    if (p.m > g.n()) return std::nullopt;
    require(u >= 0 && u < g.n(), "find_rooted_embedding: vertex out of range");
    EmbedSearch s(g, p);
    s.map[p.root] = u;
    s.used = 1u << u;
    if (!s.consistent(p.root)) return std::nullopt;  // trivially true, kept for shape
    if (s.run(1)) return s.map;
    return std::nullopt;
}

TrianglePositions covers_T(const ThreeGraph& g, int u) {
    TrianglePositions pos;
    int n = g.n();
    std::vector<std::pair<int, int>> link_pairs;  // pairs completing an edge with u
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (x != u && y != u && g.has_edge(u, x, y)) link_pairs.emplace_back(x, y);

    // T1: {u,x,y}, {s,t,x}, {s,t,y}
    for (auto [x, y] : link_pairs) {
        for (int s = 0; s < n && !pos.t1; ++s) {
            if (s == u || s == x || s == y) continue;
            for (int t = s + 1; t < n; ++t) {
                if (t == u || t == x || t == y) continue;
                if (g.has_edge(s, t, x) && g.has_edge(s, t, y)) {
                    pos.t1 = true;
                    break;
                }
            }
        }
        if (pos.t1) break;
    }
    // T2: {u,a,b}, {u,c,d}, {a,b,c}
    for (auto [a, b] : link_pairs) {
        for (int c = 0; c < n && !pos.t2; ++c) {
            if (c == u || c == a || c == b) continue;
            if (!g.has_edge(a, b, c)) continue;
            for (int d = 0; d < n; ++d) {
                if (d == u || d == a || d == b || d == c) continue;
                if (g.has_edge(u, c, d)) {
                    pos.t2 = true;
                    break;
                }
            }
        }
        if (pos.t2) break;
    }
    // T3: {u,b,c}, {u,b,d}, {c,d,e}
    for (int b = 0; b < n && !pos.t3; ++b) {
        if (b == u) continue;
        for (int c = 0; c < n && !pos.t3; ++c) {
            if (c == u || c == b || !g.has_edge(u, b, c)) continue;
            for (int d = c + 1; d < n && !pos.t3; ++d) {
                if (d == u || d == b || !g.has_edge(u, b, d)) continue;
                for (int e = 0; e < n; ++e) {
                    if (e == u || e == b || e == c || e == d) continue;
                    if (g.has_edge(c, d, e)) {
                        pos.t3 = true;
                        break;
                    }
                }
            }
        }
    }
    return pos;
}

bool covers_P2_center(const ThreeGraph& g, int u) {
    return has_matching(g.link_graph(u), 2);
}

bool covers_Sk_center(const ThreeGraph& g, int u, int k) {
    require(k >= 1, "covers_Sk_center: k must be positive");
    return has_matching(g.link_graph(u), k);
}

bool covers_Sk(const ThreeGraph& g, int u, int k) {
    if (covers_Sk_center(g, u, k)) return true;
    // leaf position: u in an edge {u,a,c} with c the center and a (k-1)-matching
    // in the link of c avoiding u and a
    int n = g.n();
    for (int a = 0; a < n; ++a) {
        if (a == u) continue;
        for (int c = 0; c < n; ++c) {
            if (c == u || c == a || !g.has_edge(u, a, c)) continue;
            VertexSet avoid = (VertexSet{1} << u) | (VertexSet{1} << a);
            if (has_matching(g.link_graph(c), k - 1, avoid)) return true;
        }
    }
    return false;
}

namespace {

const std::vector<int>& path_root_orbits(int k) {
    static std::mutex mu;
    static std::map<int, std::vector<int>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end())
        it = cache.emplace(k, root_orbit_representatives(path_pattern(k, 0))).first;
    return it->second;
}

}  // namespace

bool covers_Pk(const ThreeGraph& g, int u, int k) {
    Pattern p = path_pattern(k, 0);
    for (int root : path_root_orbits(k)) {
        p.root = root;
        if (find_rooted_embedding(g, p, u)) return true;
    }
    return false;
}

bool covers_P3_position2(const ThreeGraph& g, int u) {
    int n = g.n();
    for (int v3 = 0; v3 < n; ++v3) {
        if (v3 == u) continue;
        for (int v4 = 0; v4 < n; ++v4) {
            if (v4 == u || v4 == v3 || !g.has_edge(u, v3, v4)) continue;
            for (int v5 = 0; v5 < n; ++v5) {
                if (v5 == u || v5 == v3 || v5 == v4) continue;
                for (int v6 = v5 + 1; v6 < n; ++v6) {
                    if (v6 == u || v6 == v3 || v6 == v4) continue;
                    if (!g.has_edge(v4, v5, v6)) continue;
                    for (int v1 = 0; v1 < n; ++v1) {
                        if (v1 == u || v1 == v3 || v1 == v4 || v1 == v5 || v1 == v6)
                            continue;
                        for (int v2 = v1 + 1; v2 < n; ++v2) {
                            if (v2 == u || v2 == v3 || v2 == v4 || v2 == v5 ||
                                v2 == v6)
                                continue;
                            if (g.has_edge(u, v1, v2)) return true;
                        }
                    }
                }
            }
        }
    }
    return false;
}

namespace {

struct NamedPattern {
    enum Kind { T, T1, T2, T3, P2, P2c, P3, P3pos2, Pk, Sk, Skc } kind;
    int k = 0;
};

std::optional<NamedPattern> parse_name(const std::string& name) {
    if (name == "T") return NamedPattern{NamedPattern::T};
    if (name == "T1") return NamedPattern{NamedPattern::T1};
    if (name == "T2") return NamedPattern{NamedPattern::T2};
    if (name == "T3") return NamedPattern{NamedPattern::T3};
    if (name == "P2") return NamedPattern{NamedPattern::P2};
    if (name == "P2c") return NamedPattern{NamedPattern::P2c};
    if (name == "P3") return NamedPattern{NamedPattern::P3};
    if (name == "P3pos2") return NamedPattern{NamedPattern::P3pos2};
    auto prefixed = [&](const std::string& pre) -> std::optional<int> {
        if (name.size() <= pre.size() || name.compare(0, pre.size(), pre) != 0)
            return std::nullopt;
        try {
            int k = std::stoi(name.substr(pre.size()));
            if (k >= 2 && k <= 6) return k;
        } catch (...) {
        }
        return std::nullopt;
    };
    if (auto k = prefixed("Pk:")) return NamedPattern{NamedPattern::Pk, *k};
    if (auto k = prefixed("Sk:")) return NamedPattern{NamedPattern::Sk, *k};
    if (auto k = prefixed("Skc:")) return NamedPattern{NamedPattern::Skc, *k};
    return std::nullopt;
}

}  // namespace

bool is_known_pattern(const std::string& name) {
    return parse_name(name).has_value();
}

bool vertex_covered(const ThreeGraph& g, int u, const std::string& name) {
    auto np = parse_name(name);
    require(np.has_value(), "unknown pattern name: " + name);
    switch (np->kind) {
        case NamedPattern::T: return covers_T(g, u).any();
        case NamedPattern::T1: return covers_T(g, u).t1;
        case NamedPattern::T2: return covers_T(g, u).t2;
        case NamedPattern::T3: return covers_T(g, u).t3;
        case NamedPattern::P2: return covers_Sk(g, u, 2);
        case NamedPattern::P2c: return covers_P2_center(g, u);
        case NamedPattern::P3: return covers_Pk(g, u, 3);
        case NamedPattern::P3pos2: return covers_P3_position2(g, u);
        case NamedPattern::Pk: return covers_Pk(g, u, np->k);
        case NamedPattern::Sk: return covers_Sk(g, u, np->k);
        case NamedPattern::Skc: return covers_Sk_center(g, u, np->k);
    }
    return false;
}

std::vector<Pattern> patterns_for_name(const std::string& name) {
    auto np = parse_name(name);
    require(np.has_value(), "unknown pattern name: " + name);
    auto all_orbits = [](Pattern p) {
        std::vector<Pattern> out;
        for (int r : root_orbit_representatives(p)) {
            p.root = r;
            out.push_back(p);
        }
        return out;
    };
    switch (np->kind) {
        case NamedPattern::T: return all_orbits(generalized_triangle(0));
        case NamedPattern::T1: return {generalized_triangle(4)};
        case NamedPattern::T2: return {generalized_triangle(2)};
        case NamedPattern::T3: return {generalized_triangle(0)};
        case NamedPattern::P2: return all_orbits(star_pattern(2, 0));
        case NamedPattern::P2c: return {star_pattern(2, 0)};
        case NamedPattern::P3: return all_orbits(path_pattern(3, 0));
        case NamedPattern::P3pos2: return {path_pattern(3, 2)};
        case NamedPattern::Pk: return all_orbits(path_pattern(np->k, 0));
        case NamedPattern::Sk: return all_orbits(star_pattern(np->k, 0));
        case NamedPattern::Skc: return {star_pattern(np->k, 0)};
    }
    return {};
}

CoverReport has_F_covering(const ThreeGraph& g, const std::string& name) {
    auto np = parse_name(name);
    require(np.has_value(), "unknown pattern name: " + name);
    CoverReport rep;
    rep.labels.resize(g.n());
    for (int u = 0; u < g.n(); ++u) {
        if (np->kind == NamedPattern::T) {
            auto pos = covers_T(g, u);
            if (pos.t1) rep.labels[u].push_back("T1");
            if (pos.t2) rep.labels[u].push_back("T2");
            if (pos.t3) rep.labels[u].push_back("T3");
        } else if (vertex_covered(g, u, name)) {
            rep.labels[u].push_back(name);
        }
        if (rep.labels[u].empty()) rep.uncovered.push_back(u);
    }
    return rep;
}

CoverReport has_F_covering(const ThreeGraph& g, const Pattern& custom) {
    CoverReport rep;
    rep.labels.resize(g.n());
    for (int u = 0; u < g.n(); ++u) {
        if (find_rooted_embedding(g, custom, u))
            rep.labels[u].push_back("F");
        else
            rep.uncovered.push_back(u);
    }
    return rep;
}

}  // namespace hypercover
