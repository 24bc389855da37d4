#include "hypercover/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <random>
#include <thread>
#include <unordered_set>

#include "hypercover/io.hpp"
#include "hypercover/isomorphism.hpp"
#include "hypercover/patterns.hpp"

namespace hypercover {

std::string to_string(OutcomeKind k) {
    switch (k) {
        case OutcomeKind::Value: return "value";
        case OutcomeKind::Witness: return "witness";
        case OutcomeKind::Exhausted: return "exhausted";
        case OutcomeKind::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

struct EdgeBitsHash {
    std::size_t operator()(const EdgeBits& b) const { return b.hash(); }
};

}  // namespace

EnumerationResult enumerate_threegraphs(
    int n, bool isomorph_rejection,
    const std::function<bool(const ThreeGraph&)>& visitor, long long budget) {
    require(n >= 1, "enumerate: need n >= 1");
    EnumerationResult res;
    auto spent = [&] { return budget >= 0 && res.visited >= budget; };
    if (!isomorph_rejection) {
        require(n <= 6, "enumerate: labelled enumeration needs n <= 6");
        int t = TripleTable::get(n).num_triples;
        std::uint64_t total = std::uint64_t{1} << t;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            if (spent()) {
                res.completed = false;
                return res;
            }
            EdgeBits bits;
            bits.w[0] = idx;
            ++res.visited;
            if (!visitor(ThreeGraph::from_bits(n, bits))) {
                res.completed = false;
                return res;
            }
        }
        return res;
    }
    require(n <= 7, "enumerate: isomorph rejection needs n <= 7");
    // breadth-first over edge counts, one canonical representative per class
    int t = TripleTable::get(n).num_triples;
    std::unordered_set<EdgeBits, EdgeBitsHash> level;
    level.insert(EdgeBits{});
    while (!level.empty()) {
        std::vector<EdgeBits> reps(level.begin(), level.end());
        std::sort(reps.begin(), reps.end());
        std::unordered_set<EdgeBits, EdgeBitsHash> next;
        for (const auto& bits : reps) {
            if (spent()) {
                res.completed = false;
                return res;
            }
            ThreeGraph g = ThreeGraph::from_bits(n, bits);
            ++res.visited;
            if (!visitor(g)) {
                res.completed = false;
                return res;
            }
            for (int e = 0; e < t; ++e) {
                if (bits.test(e)) continue;
                g.add_edge_index(e);
                next.insert(canonical_form(g).bits());
                g.remove_edge_index(e);
            }
        }
        level = std::move(next);
    }
    return res;
}

namespace {

// first uncovered vertex, or -1
int first_uncovered(const ThreeGraph& g, const std::string& pattern) {
    for (int u = 0; u < g.n(); ++u)
        if (!vertex_covered(g, u, pattern)) return u;
    return -1;
}

struct ShardBest {
    int value = -1;
    EdgeBits bits;
    int uncovered = -1;
    long long graphs = 0;
};

}  // namespace

SearchOutcome compute_threshold_exact(int n, const std::string& pattern, int i,
                                      int num_threads) {
    require(n >= 1 && n <= 6, "threshold: exact computation needs n <= 6");
    require(i == 1 || i == 2, "threshold: i must be 1 or 2");
    require(is_known_pattern(pattern), "threshold: unknown pattern " + pattern);
    auto t0 = std::chrono::steady_clock::now();
    const auto& tab = TripleTable::get(n);
    std::uint64_t total = std::uint64_t{1} << tab.num_triples;
    constexpr int kShards = 64;
    std::uint64_t block = (total + kShards - 1) / kShards;
    std::vector<ShardBest> best(kShards);

    auto run_shard = [&](int s) {
        ShardBest& b = best[s];
        std::uint64_t lo = s * block, hi = std::min(total, lo + block);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            EdgeBits bits;
            bits.w[0] = idx;
            ThreeGraph g = ThreeGraph::from_bits(n, bits);
            ++b.graphs;
            if (g.min_degree(i) <= b.value) continue;
            int u = first_uncovered(g, pattern);
            if (u >= 0) {
                b.value = g.min_degree(i);
                b.bits = bits;
                b.uncovered = u;
            }
        }
    };

    int hw = static_cast<int>(std::thread::hardware_concurrency());
    int workers = num_threads > 0 ? num_threads : std::clamp(hw, 1, 16);
    workers = std::min(workers, kShards);
    std::atomic<int> cursor{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int s = cursor.fetch_add(1); s < kShards; s = cursor.fetch_add(1))
                run_shard(s);
        });
    for (auto& th : pool) th.join();

    SearchOutcome out;
    out.kind = OutcomeKind::Value;
    for (const auto& b : best) {  // ordered reduction; first shard wins ties
        out.stats.graphs += b.graphs;
        if (b.value > out.value) {
            out.value = b.value;
            out.witness = ThreeGraph::from_bits(n, b.bits);
            out.uncovered_vertex = b.uncovered;
        }
    }
    out.stats.seconds = seconds_since(t0);
    out.note = "exhaustive over all " + std::to_string(total) +
               " labelled graphs; every graph with min " + std::to_string(i) +
               "-degree >= " + std::to_string(out.value + 1) + " has a " +
               pattern + "-covering";
    return out;
}

namespace {

struct WitnessDFS {
    int n, i, d;
    std::string pattern;
    const TripleTable& tab;
    ThreeGraph g;
    EdgeBits excluded;
    SearchLimits lim;
    std::chrono::steady_clock::time_point t0;
    long long nodes = 0;
    bool out_of_budget = false;

    std::vector<EdgeBits> set_masks;  // one per i-set

    WitnessDFS(int n_, int i_, int d_, std::string pat, SearchLimits lim_)
        : n(n_), i(i_), d(d_), pattern(std::move(pat)),
          tab(TripleTable::get(n_)), g(n_), lim(lim_),
          t0(std::chrono::steady_clock::now()) {
        if (i == 1) {
            for (int v = 0; v < n; ++v) set_masks.push_back(tab.vertex_mask[v]);
        } else {
            for (int b = 1; b < n; ++b)
                for (int a = 0; a < b; ++a)
                    set_masks.push_back(tab.pair_mask[pair_index(a, b)]);
        }
    }

    bool budget_hit() {
        if (lim.max_nodes > 0 && nodes >= lim.max_nodes) return true;
        if ((nodes & 2047) == 0 && lim.max_seconds > 0 &&
            seconds_since(t0) > lim.max_seconds)
            return true;
        return false;
    }

    // returns true iff a witness was completed (left in g)
    bool search() {
        ++nodes;
        if (budget_hit()) {
            out_of_budget = true;
            return false;
        }
        if (vertex_covered(g, 0, pattern)) return false;

        // most-constrained deficient i-set under the optimistic triple count
        int pick = -1, pick_avail = 0;
        for (std::size_t s = 0; s < set_masks.size(); ++s) {
            const EdgeBits& mask = set_masks[s];
            int deg = g.bits().and_count(mask);
            if (deg >= d) continue;
            int avail = 0;
            for (int w = 0; w < EdgeBits::kWords; ++w)
                avail += std::popcount(mask.w[w] & ~excluded.w[w] &
                                       ~g.bits().w[w]);
            if (deg + avail < d) return false;  // admissible prune
            if (pick < 0 || avail < pick_avail) {
                pick = static_cast<int>(s);
                pick_avail = avail;
            }
        }
        if (pick < 0) return true;  // all degree constraints satisfied

        // candidate triples for the chosen set; drop (and exclude for this
        // subtree) any whose addition covers vertex 0 -- coverage is monotone
        std::vector<int> cands;
        std::vector<int> subtree_excluded;
        set_masks[pick].for_each([&](int e) {
            if (excluded.test(e) || g.bits().test(e)) return;
            g.add_edge_index(e);
            bool covers = vertex_covered(g, 0, pattern);
            g.remove_edge_index(e);
            if (covers) {
                excluded.set(e);
                subtree_excluded.push_back(e);
            } else {
                cands.push_back(e);
            }
        });
        int deg = g.bits().and_count(set_masks[pick]);
        bool found = false;
        if (deg + static_cast<int>(cands.size()) >= d) {
            // order by how many deficient i-sets each candidate feeds
            std::vector<std::pair<int, int>> scored;
            for (int e : cands) {
                int score = 0;
                for (const auto& mask : set_masks)
                    if (mask.test(e) && g.bits().and_count(mask) < d) ++score;
                scored.emplace_back(-score, e);  // ties by colex rank
            }
            std::sort(scored.begin(), scored.end());
            for (std::size_t j = 0; j < scored.size() && !found; ++j) {
                int e = scored[j].second;
                g.add_edge_index(e);
                found = search();
                if (!found) g.remove_edge_index(e);
                if (out_of_budget) break;
                if (!found) {
                    excluded.set(e);  // later branches assume e absent
                    subtree_excluded.push_back(e);
                }
            }
        }
        if (!found)
            for (int e : subtree_excluded) excluded.reset(e);
        return found;
    }
};

}  // namespace

SearchOutcome find_witness(int n, const std::string& pattern, int i, int d,
                           SearchLimits limits) {
    require(n >= 1 && n <= kMaxVertices, "witness: need 1 <= n <= 16");
    require(i == 1 || i == 2, "witness: i must be 1 or 2");
    require(d >= 0, "witness: d must be nonnegative");
    require(is_known_pattern(pattern), "witness: unknown pattern " + pattern);
    SearchOutcome out;
    long long cap = i == 1 ? binom(n - 1, 2) : n - 2;
    if (d > cap) {
        out.kind = OutcomeKind::Exhausted;
        out.note = "no n-vertex 3-graph attains min " + std::to_string(i) +
                   "-degree " + std::to_string(d);
        return out;
    }
    // a witness exists iff one exists with vertex 0 uncovered (relabelling)
    WitnessDFS dfs(n, i, d, pattern, limits);
    bool found = dfs.search();
    out.stats.nodes = dfs.nodes;
    out.stats.seconds = seconds_since(dfs.t0);
    if (found) {
        require(dfs.g.min_degree(i) >= d && !vertex_covered(dfs.g, 0, pattern),
                "witness: re-validation failed");
        out.kind = OutcomeKind::Witness;
        out.witness = dfs.g;
        out.uncovered_vertex = 0;
    } else if (dfs.out_of_budget) {
        out.kind = OutcomeKind::BudgetExceeded;
        out.note = "node or time budget exhausted before a decision";
    } else {
        out.kind = OutcomeKind::Exhausted;
        out.note = "no witness: every n-vertex graph with min " +
                   std::to_string(i) + "-degree >= " + std::to_string(d) +
                   " has a " + pattern + "-covering";
    }
    return out;
}

ThreeGraph random_threegraph(int n, std::optional<std::pair<int, int>> target,
                             std::uint64_t seed, double density) {
    require(n >= 1 && n <= kMaxVertices, "random: need 1 <= n <= 16");
    require(density >= 0.0 && density <= 1.0, "random: density in [0,1]");
    const auto& tab = TripleTable::get(n);
    std::mt19937_64 gen(seed);
    std::bernoulli_distribution coin(density);
    ThreeGraph g(n);
    for (int e = 0; e < tab.num_triples; ++e)
        if (coin(gen)) g.add_edge_index(e);
    if (!target) return g;

    auto [i, d] = *target;
    require(i == 1 || i == 2, "random: target i must be 1 or 2");
    long long cap = i == 1 ? binom(n - 1, 2) : n - 2;
    require(d >= 0 && d <= cap, "random: unsatisfiable degree target");

    std::vector<EdgeBits> set_masks;
    if (i == 1) {
        for (int v = 0; v < n; ++v) set_masks.push_back(tab.vertex_mask[v]);
    } else {
        for (int b = 1; b < n; ++b)
            for (int a = 0; a < b; ++a)
                set_masks.push_back(tab.pair_mask[pair_index(a, b)]);
    }
    for (;;) {
        std::vector<const EdgeBits*> deficient;
        for (const auto& mask : set_masks)
            if (g.bits().and_count(mask) < d) deficient.push_back(&mask);
        if (deficient.empty()) break;
        int best_e = -1, best_score = 0;
        for (int e = 0; e < tab.num_triples; ++e) {
            if (g.has_edge_index(e)) continue;
            int score = 0;
            for (const auto* mask : deficient)
                if (mask->test(e)) ++score;
            if (score > best_score) {  // ties keep the colex-least triple
                best_score = score;
                best_e = e;
            }
        }
        require(best_e >= 0, "random: repair loop stalled");
        g.add_edge_index(best_e);
    }
    return g;
}

const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> reg = [] {
        std::vector<TheoremInfo> v;
        auto add = [&](std::string id, std::string claim, int i, int min_n,
                       bool uses_k, std::function<long long(int, int)> floor,
                       std::function<bool(const ThreeGraph&, int, int)> covered) {
            v.push_back({std::move(id), std::move(claim), i, min_n, uses_k,
                         std::move(floor), std::move(covered)});
        };
        add("Thm1.1", "min codegree above c_2(n,T) forces a T covering", 2, 5,
            false,
            [](int n, int) -> long long {
                return (n >= 11 && (n - 1) % 3 == 0) ? 3 : 2;
            },
            [](const ThreeGraph& g, int u, int) { return covers_T(g, u).any(); });
        add("Thm1.2ii",
            "min degree > n^2/6+5n/6-3 forces a T^1 or T^2 covering", 1, 5,
            false,
            [](int n, int) -> long long {
                return (1LL * n * n + 5LL * n - 18) / 6 + 1;
            },
            [](const ThreeGraph& g, int u, int) {
                auto p = covers_T(g, u);
                return p.t1 || p.t2;
            });
        add("Thm1.2iii", "min degree > n^2/4+n/4-2 forces T^1 and T^2 coverings",
            1, 5, false,
            [](int n, int) -> long long { return (1LL * n * n + n - 8) / 4 + 1; },
            [](const ThreeGraph& g, int u, int) {
                auto p = covers_T(g, u);
                return p.t1 && p.t2;
            });
        add("Thm1.3", "min codegree >= 1 forces a P_2 covering", 2, 5, false,
            [](int, int) -> long long { return 1; },
            [](const ThreeGraph& g, int u, int) { return covers_Sk(g, u, 2); });
        add("Thm1.4", "min degree >= 4 forces a P_2 covering", 1, 8, false,
            [](int, int) -> long long { return 4; },
            [](const ThreeGraph& g, int u, int) { return covers_Sk(g, u, 2); });
        add("Thm1.5", "min codegree >= 2 forces a P_2 centered at every vertex",
            2, 5, false, [](int, int) -> long long { return 2; },
            [](const ThreeGraph& g, int u, int) {
                return covers_P2_center(g, u);
            });
        add("s32", "min codegree >= 2 forces an S_3 covering", 2, 7, false,
            [](int, int) -> long long { return 2; },
            [](const ThreeGraph& g, int u, int) { return covers_Sk(g, u, 3); });
        add("S3center",
            "min codegree >= 3 forces an S_3 centered at every vertex", 2, 7,
            false, [](int, int) -> long long { return 3; },
            [](const ThreeGraph& g, int u, int) {
                return covers_Sk_center(g, u, 3);
            });
        add("sk2i",
            "min codegree > max{(4k^2-6k+2)/(n-1), k-2+k(n-k)/(n-1)} forces an "
            "S_k centered at every vertex",
            2, 0, true,
            [](int n, int k) -> long long {
                long long f1 = (4LL * k * k - 6 * k + 2) / (n - 1);
                long long f2 = ((k - 2LL) * (n - 1) + 1LL * k * (n - k)) / (n - 1);
                return std::max(f1, f2) + 1;
            },
            [](const ThreeGraph& g, int u, int k) {
                return covers_Sk_center(g, u, k);
            });
        add("sk2ii",
            "min degree > max{C(2k-1,2), C(n-1,2)-C(n-k,2)} forces an S_k "
            "covering",
            1, 0, true,
            [](int n, int k) -> long long {
                return std::max(binom(2 * k - 1, 2),
                                binom(n - 1, 2) - binom(n - k, 2)) +
                       1;
            },
            [](const ThreeGraph& g, int u, int k) { return covers_Sk(g, u, k); });
        add("p32", "min codegree >= 2 forces a P_3 covering", 2, 8, false,
            [](int, int) -> long long { return 2; },
            [](const ThreeGraph& g, int u, int) { return covers_Pk(g, u, 3); });
        add("p31", "min degree >= n+5 forces a P_3 covering", 1, 9, false,
            [](int n, int) -> long long { return n + 5; },
            [](const ThreeGraph& g, int u, int) { return covers_Pk(g, u, 3); });
        add("p32pos2",
            "min codegree >= 3 forces a P_3 through every vertex at position 2",
            2, 8, false, [](int, int) -> long long { return 3; },
            [](const ThreeGraph& g, int u, int) {
                return covers_P3_position2(g, u);
            });
        add("pk2i", "min codegree >= 2k-1 forces a P_k covering", 2, 0, true,
            [](int, int k) -> long long { return 2 * k - 1; },
            [](const ThreeGraph& g, int u, int k) { return covers_Pk(g, u, k); });
        add("pk2ii",
            "min degree > C(n-1,2)-C(n-2k+1,2) forces a P_k covering", 1, 0,
            true,
            [](int n, int k) -> long long {
                return binom(n - 1, 2) - binom(n - 2 * k + 1, 2) + 1;
            },
            [](const ThreeGraph& g, int u, int k) { return covers_Pk(g, u, k); });
        add("c1p2center",
            "min degree >= n-1 forces a P_2 centered at every vertex", 1, 5,
            false, [](int n, int) -> long long { return n - 1; },
            [](const ThreeGraph& g, int u, int) {
                return covers_P2_center(g, u);
            });
        return v;
    }();
    return reg;
}

const TheoremInfo& theorem_by_id(const std::string& id) {
    for (const auto& t : theorem_registry())
        if (t.id == id) return t;
    if (id == "Thm1.6") return theorem_by_id("s32");
    throw invalid_argument_error("audit: unknown theorem id " + id);
}

AuditReport audit_theorem(const std::string& theorem_id, int n, int k,
                          int samples, std::uint64_t seed) {
    const TheoremInfo& info = theorem_by_id(theorem_id);
    AuditReport rep;
    rep.theorem_id = info.id;
    rep.n = n;
    rep.k = k;
    rep.i = info.i;
    rep.samples = samples;
    rep.seed = seed;
    if (info.uses_k) {
        require(k >= 3, "audit: " + info.id + " needs k >= 3");
        int need = info.id == "pk2ii" ? 4 * k : 2 * k + 1;
        require(n >= need, "audit: " + info.id + " needs n >= " +
                               std::to_string(need));
    } else {
        require(n >= info.min_n, "audit: " + info.id + " needs n >= " +
                                     std::to_string(info.min_n));
    }
    require(n <= kMaxVertices, "audit: need n <= 16");
    rep.degree_floor = info.floor(n, k);
    long long cap = info.i == 1 ? binom(n - 1, 2) : n - 2;
    require(rep.degree_floor <= cap,
            "audit: hypothesis unsatisfiable at this n (floor " +
                std::to_string(rep.degree_floor) + " > " + std::to_string(cap) +
                ")");
    for (int s = 0; s < samples; ++s) {
        ThreeGraph g = random_threegraph(
            n, std::pair{info.i, static_cast<int>(rep.degree_floor)}, seed + s,
            rep.density);
        for (int u = 0; u < n; ++u) {
            if (info.covered(g, u, k)) continue;
            ++rep.violations;
            if (rep.counterexamples.size() < 3)
                rep.counterexamples.push_back(format_graph(
                    g, {"uncovered " + std::to_string(u), "sample seed " +
                                                              std::to_string(seed + s)}));
            break;
        }
    }
    return rep;
}

TwoGraph two_graph_from_mask(int n, std::uint64_t mask) {
    TwoGraph h(n);
    int e = 0;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a, ++e)
            if ((mask >> e) & 1) h.add_edge(a, b);
    return h;
}

SgBtReport audit_sgbt_exhaustive(int n) {
    require(n >= 7 && n <= 8, "sgbt audit: need 7 <= n <= 8");
    SgBtReport rep;
    rep.n = n;
    int pairs = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ++rep.total;
        TwoGraph h = two_graph_from_mask(n, mask);
        if (h.min_degree() < 2 || has_matching(h, 3)) continue;
        ++rep.applicable;
        try {
            switch (classify_no3matching(h)) {
                case BookClass::Book: ++rep.books; break;
                case BookClass::BookMinus: ++rep.books_minus; break;
                case BookClass::NotApplicable: ++rep.exceptions; break;
            }
        } catch (const std::logic_error&) {
            ++rep.exceptions;
        }
    }
    return rep;
}

ErdosGallaiReport audit_erdos_gallai_exhaustive(int max_n) {
    require(max_n >= 3 && max_n <= 8, "eg audit: need 3 <= max_n <= 8");
    ErdosGallaiReport rep;
    rep.max_n = max_n;
    for (int n = 3; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        std::uint64_t total = std::uint64_t{1} << pairs;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            TwoGraph h = two_graph_from_mask(n, mask);
            for (int k = 2; k <= 3; ++k) {
                if (n < 2 * k - 1) continue;
                if (has_matching(h, k)) continue;
                ++rep.checked;
                if (h.edge_count() > erdos_gallai_bound(n, k)) ++rep.violations;
            }
        }
    }
    return rep;
}

}  // namespace hypercover
