#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "idealgraph/closed_form.hpp"
#include "idealgraph/cycles.hpp"
#include "idealgraph/harness.hpp"
#include "idealgraph/io.hpp"
#include "idealgraph/planarity.hpp"

namespace py = pybind11;
using namespace idealgraph;

namespace {

struct PyGraph {
    int64_t m;
    int64_t n;
    std::vector<int64_t> vertices;
    std::vector<std::pair<int64_t, int64_t>> edges;
    std::vector<int64_t> isolated;
};

PyGraph make_py_graph(int64_t m, int64_t n) {
    IdealGraph g = build_graph(validate_module_pair(m, n));
    io::ParsedGraph snap = io::snapshot(g);
    return PyGraph{snap.m, snap.n, snap.vertices, snap.edges, snap.isolated};
}

struct PyClassification {
    bool structural_planar;
    bool structural_outerplanar;
    bool structural_ring;
    bool closed_planar;
    bool closed_outerplanar;
    bool closed_ring;
    std::vector<int> planar_cases;
    std::vector<int> outerplanar_cases;
    std::vector<int> ring_cases;
    bool agreement;
};

PyClassification classify_pair(int64_t m, int64_t n) {
    ModulePair pair = validate_module_pair(m, n);
    IdealGraph g = build_graph(pair);
    PlanarityResult planar = is_planar(g.graph);
    bool outer = is_outerplanar(g.graph);
    RingReport ring = is_ring_graph(g.graph);
    closed_form::Prediction pred = closed_form::predict(pair);
    PyClassification c{planar.planar,
                       outer,
                       ring.decision,
                       pred.planar,
                       pred.outerplanar,
                       pred.ring,
                       pred.planar_cases,
                       pred.outerplanar_cases,
                       pred.ring_cases,
                       true};
    c.agreement = c.structural_planar == c.closed_planar &&
                  c.structural_outerplanar == c.closed_outerplanar &&
                  c.structural_ring == c.closed_ring;
    return c;
}

struct PySweepSummary {
    int64_t max_m;
    int64_t pairs_checked;
    std::vector<std::tuple<int64_t, int64_t, std::string>> mismatches;
    int64_t certificate_failures;
    int64_t oracle_failures;
    int64_t invariant_violations;
    bool passed;
};

PySweepSummary run_sweep(int64_t max_m, int64_t oracle_bound, int jobs) {
    harness::SweepOptions options;
    options.oracle_bound = oracle_bound;
    options.jobs = jobs;
    options.keep_records = false;
    harness::SweepReport report = harness::sweep(max_m, options);
    PySweepSummary s;
    s.max_m = report.max_m;
    s.pairs_checked = report.pairs_checked;
    for (const auto& mm : report.mismatches) s.mismatches.emplace_back(mm.m, mm.n, mm.property);
    s.certificate_failures = static_cast<int64_t>(report.certificate_failures.size());
    s.oracle_failures = static_cast<int64_t>(report.oracle_failures.size());
    s.invariant_violations = static_cast<int64_t>(report.invariant_violations.size());
    s.passed = report.passed();
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Intersection graphs G_n(Z_m) of ideals of Z_m: construction, planarity /"
              " outerplanarity / ring-graph deciders, closed-form classification, and"
              " cross-validation sweeps.";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<ModulePair>(m, "ModulePair")
        .def_property_readonly("m", [](const ModulePair& p) { return p.m.value; })
        .def_property_readonly("n", [](const ModulePair& p) { return p.n.value; })
        .def_readonly("primes", &ModulePair::primes)
        .def_readonly("alpha", &ModulePair::alpha)
        .def_readonly("beta", &ModulePair::beta)
        .def_readonly("support", &ModulePair::support)
        .def("__repr__", [](const ModulePair& p) {
            return "ModulePair(m=" + std::to_string(p.m.value) +
                   ", n=" + std::to_string(p.n.value) + ")";
        });

    py::class_<PyGraph>(m, "IdealGraph")
        .def_readonly("m", &PyGraph::m)
        .def_readonly("n", &PyGraph::n)
        .def_readonly("vertices", &PyGraph::vertices)
        .def_readonly("edges", &PyGraph::edges)
        .def_readonly("isolated", &PyGraph::isolated)
        .def("__repr__", [](const PyGraph& g) {
            return "IdealGraph(m=" + std::to_string(g.m) + ", n=" + std::to_string(g.n) +
                   ", vertices=" + std::to_string(g.vertices.size()) +
                   ", edges=" + std::to_string(g.edges.size()) + ")";
        });

    py::class_<PyClassification>(m, "Classification")
        .def_readonly("structural_planar", &PyClassification::structural_planar)
        .def_readonly("structural_outerplanar", &PyClassification::structural_outerplanar)
        .def_readonly("structural_ring", &PyClassification::structural_ring)
        .def_readonly("closed_planar", &PyClassification::closed_planar)
        .def_readonly("closed_outerplanar", &PyClassification::closed_outerplanar)
        .def_readonly("closed_ring", &PyClassification::closed_ring)
        .def_readonly("planar_cases", &PyClassification::planar_cases)
        .def_readonly("outerplanar_cases", &PyClassification::outerplanar_cases)
        .def_readonly("ring_cases", &PyClassification::ring_cases)
        .def_readonly("agreement", &PyClassification::agreement);

    py::class_<PySweepSummary>(m, "SweepSummary")
        .def_readonly("max_m", &PySweepSummary::max_m)
        .def_readonly("pairs_checked", &PySweepSummary::pairs_checked)
        .def_readonly("mismatches", &PySweepSummary::mismatches)
        .def_readonly("certificate_failures", &PySweepSummary::certificate_failures)
        .def_readonly("oracle_failures", &PySweepSummary::oracle_failures)
        .def_readonly("invariant_violations", &PySweepSummary::invariant_violations)
        .def_readonly("passed", &PySweepSummary::passed);

    m.def(
        "factorize",
        [](int64_t k) { return factorize(k).factors; },
        py::arg("k"), "Prime factorization of k >= 2 as a list of (prime, exponent) pairs.");
    m.def(
        "proper_nontrivial_divisors",
        [](int64_t k) { return proper_nontrivial_divisors(factorize(k)); },
        py::arg("k"), "Divisors d of k with 1 < d < k, ascending.");
    m.def("validate_module_pair", &validate_module_pair, py::arg("m"), py::arg("n"),
          "Validated pair (m, n) with n | m; raises ValueError otherwise.");
    m.def("build_graph", &make_py_graph, py::arg("m"), py::arg("n"),
          "The graph G_n(Z_m) with divisor labels, edges, and isolated vertices.");
    m.def("classify", &classify_pair, py::arg("m"), py::arg("n"),
          "Structural and closed-form planar/outerplanar/ring classification of G_n(Z_m).");
    m.def(
        "verify_adjacency_criterion",
        [](int64_t m, int64_t n) {
            return harness::verify_adjacency_criterion(validate_module_pair(m, n));
        },
        py::arg("m"), py::arg("n"),
        "True iff the module-action oracle equals the lcm rule on every vertex pair.");
    m.def("sweep", &run_sweep, py::arg("max_m"), py::arg("oracle_bound") = 500,
          py::arg("jobs") = 1,
          "Cross-validate structural deciders against the closed-form tables for all m <= max_m.");
    m.def(
        "graph_json",
        [](int64_t m, int64_t n) { return io::to_json(build_graph(validate_module_pair(m, n))); },
        py::arg("m"), py::arg("n"), "JSON export of G_n(Z_m).");
    m.def(
        "graph_dot",
        [](int64_t m, int64_t n) { return io::to_dot(build_graph(validate_module_pair(m, n))); },
        py::arg("m"), py::arg("n"), "DOT export of G_n(Z_m).");

    m.attr("__version__") = "0.1.0";
}
