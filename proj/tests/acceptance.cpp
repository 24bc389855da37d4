// acceptance gate: one line per criterion, exit 0 iff all pass
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hypercover/constructions.hpp"
#include "hypercover/io.hpp"
#include "hypercover/patterns.hpp"
#include "hypercover/search.hpp"

using json = nlohmann::ordered_json;
using namespace hypercover;

namespace {

struct Gate {
    int failures = 0;

    void report(int num, const std::string& what, bool pass,
                const std::string& detail = "") {
        std::cout << "criterion " << num << ": " << (pass ? "PASS" : "FAIL")
                  << " - " << what;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << std::endl;
        if (!pass) ++failures;
    }
};

double run_seconds(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

ThreeGraph sampled(int n, std::mt19937_64& gen, double density) {
    std::bernoulli_distribution coin(density);
    ThreeGraph g(n);
    int t = TripleTable::get(n).num_triples;
    for (int e = 0; e < t; ++e)
        if (coin(gen)) g.add_edge_index(e);
    return g;
}

json audit_json(const AuditReport& rep) {
    return {{"theorem", rep.theorem_id}, {"n", rep.n},
            {"k", rep.k},               {"i", rep.i},
            {"degree_floor", rep.degree_floor},
            {"samples", rep.samples},   {"seed", rep.seed},
            {"violations", rep.violations},
            {"counterexamples", rep.counterexamples}};
}

}  // namespace

int main(int argc, char** argv) {
    bool long_pass = false;
    for (int a = 1; a < argc; ++a)
        if (!std::strcmp(argv[a], "--long")) long_pass = true;
    Gate gate;

    {  // 1: codegree threshold for the generalized triangle at n=5
        SearchOutcome t;
        double secs = run_seconds([&] { t = compute_threshold_exact(5, "T", 2); });
        bool ok = t.value == 1 && t.witness && t.witness->min_degree(2) == 1 &&
                  !vertex_covered(*t.witness, t.uncovered_vertex, "T") &&
                  find_witness(5, "T", 2, 2).kind == OutcomeKind::Exhausted &&
                  secs < 1.0;
        gate.report(1, "c_2(5,T) = 1 with witness and exhaustion certificate",
                    ok, "value " + std::to_string(t.value) + ", " +
                            std::to_string(secs) + "s");
    }

    {  // 2: codegree threshold for the generalized triangle at n=6
        SearchOutcome t;
        double secs = run_seconds([&] { t = compute_threshold_exact(6, "T", 2); });
        bool ok = t.value == 1 && secs < 60.0;
        gate.report(2, "c_2(6,T) = 1 over 2^20 graphs", ok,
                    "value " + std::to_string(t.value) + ", " +
                        std::to_string(secs) + "s parallel");
    }

    {  // 3: codegree thresholds for the 2-path
        int v5 = compute_threshold_exact(5, "P2", 2).value;
        int v6 = compute_threshold_exact(6, "P2", 2).value;
        gate.report(3, "c_2(5,P2) = 0 and c_2(6,P2) = 0", v5 == 0 && v6 == 0,
                    "values " + std::to_string(v5) + ", " + std::to_string(v6));
    }

    {  // 4: construction observation suite
        std::vector<std::string> failed;
        auto run = [&](const std::string& id, int n, int k) {
            if (!verify_observation(id, {0, n, k}).all_pass())
                failed.push_back(id + "@n" + std::to_string(n) +
                                 (k ? "k" + std::to_string(k) : ""));
        };
        double secs = run_seconds([&] {
            for (int n = 6; n <= 10; ++n) run("2.1", n, 0);
            for (int k = 4; k <= 5; ++k) run("2.2", 0, k);
            for (int n = 9; n <= 15; ++n) run("2.4", n, 0);
            for (int n = 8; n <= 12; ++n) run("3.1", n, 0);
            for (int n = 5; n <= 10; ++n) run("3.2", n, 0);
            for (int n = 7; n <= 10; ++n) run("3.3", n, 0);
            for (int n = 8; n <= 12; ++n) run("3.6", n, 0);
            for (int n = 12; n <= 14; ++n) run("3.9", n, 3);
            for (int n = 13; n <= 16; ++n) run("3.7", n, 4);
        });
        std::string detail = std::to_string(secs) + "s";
        if (!failed.empty()) {
            detail += "; failing:";
            for (const auto& f : failed) detail += " " + f;
        }
        gate.report(4, "observation suite", failed.empty() && secs < 30.0,
                    detail);
    }

    {  // 5: exhaustive book-structure classification on 7 vertices
        SgBtReport rep;
        double secs = run_seconds([&] { rep = audit_sgbt_exhaustive(7); });
        bool ok = rep.exceptions == 0 && rep.applicable > 0 && secs < 120.0;
        std::string detail = std::to_string(rep.applicable) + " applicable, " +
                             std::to_string(rep.books) + " books, " +
                             std::to_string(rep.books_minus) + " books-minus, " +
                             std::to_string(rep.exceptions) + " exceptions, " +
                             std::to_string(secs) + "s";
        if (long_pass) {
            SgBtReport r8 = audit_sgbt_exhaustive(8);
            ok = ok && r8.exceptions == 0;
            detail += "; n=8 exceptions " + std::to_string(r8.exceptions);
        }
        gate.report(5, "book structure theorem, exhaustive n=7", ok, detail);
    }

    {  // 6: matching edge bound, exhaustive to n=7
        ErdosGallaiReport rep = audit_erdos_gallai_exhaustive(7);
        gate.report(6, "matching edge bound, exhaustive n<=7",
                    rep.violations == 0 && rep.checked > 0,
                    std::to_string(rep.checked) + " checked, " +
                        std::to_string(rep.violations) + " violations");
    }

    {  // 7: specialized detectors vs the generic rooted-embedding oracle
        long long disagreements = 0, probes = 0;
        auto compare = [&](const ThreeGraph& g, const std::string& name) {
            auto pats = patterns_for_name(name);
            for (int u = 0; u < g.n(); ++u) {
                bool oracle = false;
                for (const auto& p : pats)
                    if (find_rooted_embedding(g, p, u)) {
                        oracle = true;
                        break;
                    }
                ++probes;
                if (vertex_covered(g, u, name) != oracle) ++disagreements;
            }
        };
        for (std::uint64_t idx = 0; idx < 1024; ++idx) {
            EdgeBits bits;
            bits.w[0] = idx;
            ThreeGraph g = ThreeGraph::from_bits(5, bits);
            for (const char* name : {"T", "P2", "P2c", "Sk:2", "Skc:2"})
                compare(g, name);
        }
        std::mt19937_64 gen(41);
        for (int rep = 0; rep < 10000; ++rep) {
            int n = 6 + static_cast<int>(gen() % 4);
            ThreeGraph g = sampled(n, gen, 0.1 + 0.1 * (gen() % 8));
            compare(g, "T");
            compare(g, "P2c");
            if (n >= 7) compare(g, rep % 2 ? "P3" : "Sk:3");
            if (n >= 8 && rep % 4 == 0) compare(g, "P3pos2");
        }
        gate.report(7, "detector-oracle equivalence", disagreements == 0,
                    std::to_string(probes) + " probes, " +
                        std::to_string(disagreements) + " disagreements");
    }

    {  // 8: randomized theorem audits, 200 samples each
        struct Task {
            const char* id;
            int n, k;
        };
        std::vector<Task> tasks{{"Thm1.2ii", 12, 0}, {"Thm1.2iii", 12, 0},
                                {"Thm1.5", 8, 0},    {"s32", 8, 0},
                                {"S3center", 8, 0},  {"p32", 8, 0},
                                {"p32pos2", 8, 0},   {"p31", 9, 0},
                                {"pk2i", 9, 4},      {"c1p2center", 8, 0}};
        long long violations = 0;
        std::string bad;
        for (const auto& t : tasks) {
            AuditReport rep = audit_theorem(t.id, t.n, t.k, 200, 2024);
            violations += rep.violations;
            if (rep.violations) bad += std::string(" ") + t.id;
        }
        gate.report(8, "theorem audits, 200 samples each", violations == 0,
                    violations ? "violations in" + bad : "0 violations");
    }

    {  // 9: witness searches
        SearchOutcome w13 = find_witness(13, "T", 2, 2);
        bool ok13 = w13.kind == OutcomeKind::Witness &&
                    w13.witness->min_degree(2) >= 2 &&
                    !vertex_covered(*w13.witness, 0, "T");
        bool ok5 = find_witness(5, "T", 2, 2).kind == OutcomeKind::Exhausted;
        bool ok6 = find_witness(6, "P2", 2, 1).kind == OutcomeKind::Exhausted;
        gate.report(9, "witness searches", ok13 && ok5 && ok6,
                    std::string("n=13 ") + (ok13 ? "witness" : "FAIL") +
                        ", n=5 " + (ok5 ? "exhausted" : "FAIL") + ", n=6 " +
                        (ok6 ? "exhausted" : "FAIL"));
    }

    {  // 10: audit reports are byte-identical for a fixed seed
        std::string a = audit_json(audit_theorem("Thm1.2ii", 12, 0, 100, 7)).dump();
        std::string b = audit_json(audit_theorem("Thm1.2ii", 12, 0, 100, 7)).dump();
        gate.report(10, "audit reproducibility", a == b,
                    a == b ? "byte-identical" : "reports differ");
    }

    std::cout << (gate.failures ? "ACCEPTANCE: FAIL (" +
                                      std::to_string(gate.failures) +
                                      " criteria failed)"
                                : "ACCEPTANCE: PASS")
              << std::endl;
    return gate.failures ? 1 : 0;
}
