#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hypercover/constructions.hpp"
#include "hypercover/io.hpp"
#include "hypercover/isomorphism.hpp"
#include "hypercover/patterns.hpp"
#include "hypercover/search.hpp"

namespace py = pybind11;
using namespace hypercover;

namespace {

std::vector<std::tuple<int, int, int>> edge_list(const ThreeGraph& g) {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.a, e.b, e.c);
    return out;
}

}  // namespace

PYBIND11_MODULE(_hypercover, m) {
    m.doc() = "extremal 3-graph covering kernels";

    py::class_<ThreeGraph>(m, "ThreeGraph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("complete", &ThreeGraph::complete)
        .def_property_readonly("n", &ThreeGraph::n)
        .def("has_edge", &ThreeGraph::has_edge)
        .def("add_edge", &ThreeGraph::add_edge)
        .def("remove_edge", &ThreeGraph::remove_edge)
        .def("edge_count", &ThreeGraph::edge_count)
        .def("edges", &edge_list)
        .def("degree", &ThreeGraph::degree1)
        .def("codegree", &ThreeGraph::codegree)
        .def("min_degree", &ThreeGraph::min_degree, py::arg("i"))
        .def("__eq__", [](const ThreeGraph& a, const ThreeGraph& b) {
            return a == b;
        })
        .def("__repr__", [](const ThreeGraph& g) {
            return "ThreeGraph(n=" + std::to_string(g.n()) + ", m=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("parse", [](const std::string& text) {
        std::istringstream in(text);
        return parse_graph(in).graph;
    });
    m.def("format", [](const ThreeGraph& g) { return format_graph(g); });

    m.def("build_construction", [](int id, int n, int k) {
        Construction c = build({id, n, k});
        return py::make_tuple(c.graph,
                              c.apex ? py::cast(*c.apex) : py::none(),
                              c.side_a ? py::cast(*c.side_a) : py::none());
    }, py::arg("id"), py::arg("n") = 0, py::arg("k") = 0);

    m.def("canonical_form", &canonical_form);
    m.def("is_isomorphic", &is_isomorphic);

    m.def("vertex_covered", &vertex_covered, py::arg("g"), py::arg("u"),
          py::arg("pattern"));
    m.def("has_covering", [](const ThreeGraph& g, const std::string& pattern) {
        CoverReport rep = has_F_covering(g, pattern);
        return py::make_tuple(rep.labels, rep.uncovered);
    });

    m.def("threshold_exact", [](int n, const std::string& pattern, int i) {
        SearchOutcome out = compute_threshold_exact(n, pattern, i);
        return py::make_tuple(out.value, *out.witness, out.uncovered_vertex);
    }, py::arg("n"), py::arg("pattern"), py::arg("i"));

    m.def("find_witness", [](int n, const std::string& pattern, int i, int d,
                             long long max_nodes, double max_seconds) {
        SearchLimits lim;
        if (max_nodes > 0) lim.max_nodes = max_nodes;
        if (max_seconds > 0) lim.max_seconds = max_seconds;
        SearchOutcome out = find_witness(n, pattern, i, d, lim);
        return py::make_tuple(to_string(out.kind),
                              out.witness ? py::cast(*out.witness)
                                          : py::none());
    }, py::arg("n"), py::arg("pattern"), py::arg("i"), py::arg("d"),
       py::arg("max_nodes") = 0, py::arg("max_seconds") = 0.0);

    m.def("random_threegraph", [](int n, std::optional<std::pair<int, int>> target,
                                  std::uint64_t seed, double density) {
        return random_threegraph(n, target, seed, density);
    }, py::arg("n"), py::arg("target") = py::none(), py::arg("seed") = 1,
       py::arg("density") = 0.5);

    m.def("audit_theorem", [](const std::string& id, int n, int k, int samples,
                              std::uint64_t seed) {
        AuditReport rep = audit_theorem(id, n, k, samples, seed);
        py::dict d;
        d["theorem_id"] = rep.theorem_id;
        d["n"] = rep.n;
        d["k"] = rep.k;
        d["i"] = rep.i;
        d["degree_floor"] = rep.degree_floor;
        d["samples"] = rep.samples;
        d["seed"] = rep.seed;
        d["violations"] = rep.violations;
        d["counterexamples"] = rep.counterexamples;
        return d;
    }, py::arg("theorem_id"), py::arg("n"), py::arg("k") = 0,
       py::arg("samples") = 200, py::arg("seed") = 1);
}
