#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "berge_forge/bounds.hpp"
#include "berge_forge/constructions.hpp"
#include "berge_forge/decompose.hpp"
#include "berge_forge/detect.hpp"
#include "berge_forge/errors.hpp"
#include "berge_forge/io.hpp"
#include "berge_forge/search.hpp"
#include "berge_forge/verify.hpp"

namespace py = pybind11;
using namespace berge;

namespace {

std::vector<ForbiddenSpec> parse_specs(const std::vector<std::string>& texts) {
    std::vector<ForbiddenSpec> out;
    for (const auto& t : texts) out.push_back(ForbiddenSpec::parse(t));
    return out;
}

py::object witness_object(const Witness& w) {
    return std::visit([](const auto& x) { return py::cast(x); }, w);
}

py::list triples_at(const TripleSystem& h, const EdgeIndices& idx) {
    py::list out;
    for (auto i : idx) out.append(h[i]);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact small extremal numbers for cycles, paths and Berge cycles";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<GuaranteeViolation>(m, "GuaranteeViolation", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<BipartiteGraph>(m, "BipartiteGraph")
        .def(py::init<int, int>(), py::arg("m"), py::arg("n"))
        .def(py::init([](int a, int b, const std::vector<Edge>& edges) { return BipartiteGraph(a, b, edges); }),
             py::arg("m"), py::arg("n"), py::arg("edges"))
        .def_property_readonly("left_size", &BipartiteGraph::left_size)
        .def_property_readonly("right_size", &BipartiteGraph::right_size)
        .def("edge_count", &BipartiteGraph::edge_count)
        .def("add_edge", &BipartiteGraph::add_edge)
        .def("edges", &BipartiteGraph::edges)
        .def("to_graph", &BipartiteGraph::to_graph)
        .def("__eq__", &BipartiteGraph::operator==);

    py::class_<TripleSystem>(m, "TripleSystem")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<Triple>& edges) { return TripleSystem(n, edges); }), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &TripleSystem::n)
        .def("__len__", &TripleSystem::size)
        .def("edges", &TripleSystem::edges)
        .def("contains", &TripleSystem::contains)
        .def("__eq__", &TripleSystem::operator==)
        .def("__repr__", [](const TripleSystem& h) {
            return "TripleSystem(n=" + std::to_string(h.n()) + ", edges=" + std::to_string(h.size()) + ")";
        });

    py::class_<BergeCycleWitness>(m, "BergeCycleWitness")
        .def_readonly("core", &BergeCycleWitness::core)
        .def_readonly("hyperedges", &BergeCycleWitness::hyperedges)
        .def("valid_for", &BergeCycleWitness::valid_for);

    py::class_<ThetaWitness>(m, "ThetaWitness")
        .def_readonly("cycle", &ThetaWitness::cycle)
        .def_readonly("chord", &ThetaWitness::chord);

    // core queries
    m.def("shadow_pairs", [](const TripleSystem& h) {
        py::dict out;
        for (const auto& [pair, mult] : shadow_pairs(h).entries()) out[py::cast(pair)] = mult;
        return out;
    });
    m.def("is_linear", &is_linear);
    m.def("triangle_count", &triangle_count);
    m.def("triangle_list", &triangle_list);

    // detect
    m.def("find_cycle", &find_cycle, py::arg("graph"), py::arg("length"));
    m.def("count_cycles", &count_cycles, py::arg("graph"), py::arg("length"));
    m.def("find_path", &find_path, py::arg("graph"), py::arg("vertices"));
    m.def("find_theta_at_least", &find_theta_at_least, py::arg("graph"), py::arg("length"));
    m.def("find_berge_cycle", &find_berge_cycle, py::arg("system"), py::arg("length"));
    m.def(
        "is_free",
        [](const py::object& host, const std::string& spec) {
            const auto s = ForbiddenSpec::parse(spec);
            if (py::isinstance<TripleSystem>(host)) return is_free(host.cast<const TripleSystem&>(), s);
            if (py::isinstance<BipartiteGraph>(host)) return is_free(host.cast<const BipartiteGraph&>(), s);
            return is_free(host.cast<const Graph&>(), s);
        },
        py::arg("host"), py::arg("spec"));

    // constructions
    m.def("triangle_hypergraph", &triangle_hypergraph);
    m.def("double_one_side", &double_one_side);
    m.def("blowup_c5", &blowup_c5);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_graph", &complete_graph);
    m.def("bipartite_cycle", &bipartite_cycle);

    // decompose
    m.def("build_g2", &build_g2);
    m.def("decompose", [](const TripleSystem& h) {
        const auto d = decompose(h);
        py::dict private_pairs;
        for (const auto& [i, e] : d.private_pair) {
            const auto& t = h[i];
            private_pairs[py::make_tuple(t[0], t[1], t[2])] = e;
        }
        py::dict out;
        out["g2"] = d.g2;
        out["h1"] = triples_at(h, d.h1);
        out["h2"] = triples_at(h, d.h2);
        out["private_pairs"] = private_pairs;
        out["coloring"] = d.coloring;
        out["h3"] = triples_at(h, d.h3);
        out["h4"] = triples_at(h, d.h4);
        out["h5"] = triples_at(h, d.h5);
        out["h6"] = triples_at(h, d.h6);
        out["g4"] = d.g4;
        return out;
    });
    m.def("rainbow_tripartition", [](const Graph& g) {
        const auto t = rainbow_tripartition(g);
        py::dict out;
        out["classes"] = t.classes;
        out["rainbow_count"] = t.rainbow_count;
        out["triangles"] = t.triangles;
        return out;
    });
    m.def("check_triangle_lemma", &check_triangle_lemma, py::arg("graph"), py::arg("cycle_length"));

    // bounds
    m.def("formula_names", [] {
        std::vector<std::string> out;
        for (auto id : all_formulas()) out.emplace_back(formula_name(id));
        return out;
    });
    m.def(
        "evaluate",
        [](const std::string& formula, int n, int parameter, const std::string& base) {
            const BoundFormula f{parse_formula(formula), parameter};
            BaseEstimate b = base == "exact" ? BaseEstimate::exact() : BaseEstimate::formula();
            if (base != "exact" && base != "formula") throw std::invalid_argument("base must be 'formula' or 'exact'");
            const auto v = evaluate(f, n, &b);
            py::dict out;
            out["formula"] = f.label();
            out["n"] = v.n;
            out["value"] = v.value;
            out["exact"] = v.exact ? py::cast(v.exact->to_string()) : py::none();
            out["floor"] = v.floor_value();
            out["bounds"] = v.bounded.to_string();
            out["direction"] = v.direction == BoundDirection::Upper ? "upper" : "lower";
            out["asymptotic"] = v.asymptotic;
            out["exact_bases"] = v.uses_exact_bases;
            out["note"] = v.note;
            return out;
        },
        py::arg("formula"), py::arg("n"), py::arg("parameter") = 0, py::arg("base") = "formula");

    // search
    m.def(
        "solve",
        [](const std::string& universe, int n, const std::vector<std::string>& forbid, const std::string& objective,
           int m_left, bool linear, int threads, std::uint64_t max_nodes, double max_seconds, bool oracle) {
            SearchProblem p;
            p.universe = parse_universe(universe);
            p.n = n;
            p.m = m_left;
            p.forbidden = parse_specs(forbid);
            p.objective = parse_objective(objective);
            p.linear = linear;
            p.threads = threads;
            p.budget = {max_nodes, max_seconds};
            SearchResult r;
            {
                py::gil_scoped_release release;
                r = oracle ? oracle_solve(p) : solve(p);
            }
            py::dict out;
            out["value"] = r.value;
            out["optimal"] = r.optimal;
            out["witness"] = witness_object(r.witness);
            out["nodes_explored"] = r.nodes_explored;
            out["wall_time"] = r.wall_time.count();
            return out;
        },
        py::arg("universe"), py::arg("n"), py::arg("forbid"), py::arg("objective") = "edges", py::arg("m") = 0,
        py::arg("linear") = false, py::arg("threads") = 1, py::arg("max_nodes") = 0, py::arg("max_seconds") = 0.0,
        py::arg("oracle") = false);

    // files
    m.def("write_witness", [](const py::object& w) {
        if (py::isinstance<TripleSystem>(w)) return io::write_triples(w.cast<const TripleSystem&>());
        if (py::isinstance<BipartiteGraph>(w)) return io::write_bipartite(w.cast<const BipartiteGraph&>());
        return io::write_graph(w.cast<const Graph&>());
    });
    m.def("parse_witness", [](const std::string& text) { return witness_object(io::parse_witness(text)); });

    // acceptance
    m.def(
        "run_acceptance",
        [](std::uint64_t seed, int threads, const std::vector<int>& criteria) {
            AcceptanceReport report;
            {
                py::gil_scoped_release release;
                report = run_acceptance({seed, threads}, criteria);
            }
            py::list out;
            for (const auto& r : report.criteria) {
                py::dict row;
                row["id"] = r.id;
                row["name"] = r.name;
                row["passed"] = r.passed;
                row["detail"] = r.detail;
                row["seconds"] = r.seconds;
                out.append(row);
            }
            return out;
        },
        py::arg("seed") = 0, py::arg("threads") = 1, py::arg("criteria") = std::vector<int>{});
}
