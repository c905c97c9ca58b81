// Python bindings for the toolkit's main operations. Graphs cross the
// boundary as (n, edge list) pairs or format strings; models as dicts
// mapping pattern vertex to branch set.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "minors/constructions.hpp"
#include "minors/decomposition.hpp"
#include "minors/graph_io.hpp"
#include "minors/linked.hpp"
#include "minors/minor_search.hpp"
#include "minors/model.hpp"
#include "minors/patterns.hpp"
#include "minors/separation.hpp"
#include "minors/sweep.hpp"
#include "minors/width.hpp"

namespace py = pybind11;
using namespace minors;

namespace {

const char* outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::found: return "found";
        case SearchOutcome::absent: return "absent";
        case SearchOutcome::unknown: return "unknown";
    }
    return "unknown";
}

const char* linked_name(LinkedOutcome o) {
    switch (o) {
        case LinkedOutcome::linked: return "linked";
        case LinkedOutcome::not_linked: return "not_linked";
        case LinkedOutcome::unknown: return "unknown";
    }
    return "unknown";
}

MinorModel model_from_dict(const std::map<int, std::vector<int>>& d) {
    MinorModel m;
    m.branch_sets = d;
    return m;
}

py::dict model_to_dict(const MinorModel& m) {
    py::dict d;
    for (const auto& [v, set] : m.branch_sets) d[py::int_(v)] = set;
    return d;
}

std::vector<std::vector<int>> bags_list(const PathDecomposition& d) {
    std::vector<std::vector<int>> out;
    for (const auto& bag : d.bags) out.emplace_back(bag.begin(), bag.end());
    return out;
}

PathDecomposition bags_from_list(const std::vector<std::vector<int>>& bags) {
    PathDecomposition d;
    for (const auto& bag : bags) d.bags.emplace_back(bag.begin(), bag.end());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graph-minors toolkit: generators, exact width solvers, minor search "
              "and the constructive embedding lemmas";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 std::vector<Edge> es;
                 for (auto [u, v] : edges) es.push_back(make_edge(u, v));
                 return Graph::make(n, es);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("vertices", &Graph::vertices)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const auto& [u, v] : g.edges()) out.emplace_back(u, v);
                 return out;
             })
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    // format round trips
    m.def("to_graph6", &to_graph6, py::arg("g"));
    m.def("from_graph6", &from_graph6, py::arg("line"));
    m.def("to_json", &to_json, py::arg("g"));
    m.def("from_json", &graph_from_json, py::arg("text"));
    m.def("read_dimacs", [](const std::string& text) {
        std::istringstream in(text);
        return read_dimacs(in);
    });

    // generators
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("grid_2xk", &grid_2xk, py::arg("k"));
    m.def("wheel", &wheel, py::arg("r"));
    m.def("double_wheel", &double_wheel, py::arg("r"));
    m.def("xi", &xi, py::arg("r"));
    m.def("yurt", &yurt, py::arg("k"));
    m.def("comb", &comb, py::arg("r"));
    m.def("complete_binary_tree", &complete_binary_tree, py::arg("h"));

    // exact solvers
    m.def("treewidth", [](const Graph& g) { return exact_treewidth_value(g); }, py::arg("g"));
    m.def("pathwidth", [](const Graph& g) { return exact_pathwidth_value(g); }, py::arg("g"));
    m.def(
        "pathwidth_decomposition",
        [](const Graph& g) {
            auto res = exact_pathwidth(g);
            return py::make_tuple(res.width, bags_list(res.witness));
        },
        py::arg("g"), "Exact pathwidth with an optimal bag sequence.");

    // decompositions
    m.def(
        "verify_decomposition",
        [](const Graph& g, const std::vector<std::vector<int>>& bags) {
            return verify_decomposition(g, bags_from_list(bags));
        },
        py::arg("g"), py::arg("bags"));
    m.def(
        "compactify",
        [](const Graph& g) { return bags_list(compactify(g, exact_pathwidth(g).witness)); },
        py::arg("g"), "Compact optimal path decomposition: |V| - pw bags of size pw + 1.");

    // minors and linkedness
    m.def(
        "is_minor",
        [](const Graph& pattern, const Graph& host, long long budget_ms) {
            MinorSearchOptions opts;
            opts.budget_ms = budget_ms;
            auto res = is_minor(pattern, host, opts);
            py::object model = py::none();
            if (res.model) model = model_to_dict(*res.model);
            return py::make_tuple(outcome_name(res.outcome), model);
        },
        py::arg("pattern"), py::arg("host"), py::arg("budget_ms") = 0,
        "Returns (outcome, model); outcome is 'found', 'absent' or 'unknown'.");
    m.def(
        "verify_model",
        [](const Graph& host, const Graph& pattern, const std::map<int, std::vector<int>>& model) {
            return verify_model(host, pattern, model_from_dict(model));
        },
        py::arg("host"), py::arg("pattern"), py::arg("model"),
        "List of violation messages; empty means the model is valid.");
    m.def(
        "is_linked",
        [](const Graph& g, const std::vector<int>& s, long long budget_ms) {
            LinkedOptions opts;
            opts.budget_ms = budget_ms;
            return std::string(linked_name(is_linked(g, s, opts).outcome));
        },
        py::arg("g"), py::arg("s"), py::arg("budget_ms") = 0);

    // constructions
    m.def("bound",
          [](const std::string& family, int k) { return bound(bound_family_from_name(family), k); },
          py::arg("family"), py::arg("k"),
          "Treewidth threshold forcing the family's order-k pattern.");
    m.def(
        "es_extract",
        [](const std::vector<int>& seq, int k, int l) {
            auto w = es_extract(seq, k, l);
            return py::make_tuple(
                w.direction == RunDirection::increasing ? "increasing" : "decreasing", w.indices);
        },
        py::arg("seq"), py::arg("k"), py::arg("l"),
        "Monotone run: (direction, indices into seq).");
    m.def(
        "embed_pw2_in_xi",
        [](const Graph& g) {
            auto res = embed_pw2_in_xi(g);
            py::dict out;
            out["host"] = res.host;
            out["padded"] = res.padded;
            out["model"] = model_to_dict(res.model);
            return out;
        },
        py::arg("g"), "Model of a pathwidth-2 graph inside the subdivided 2x(n-1) grid.");
    m.def(
        "wheel_from_tree_path",
        [](int h, const std::vector<int>& psi) {
            auto res = wheel_from_tree_path(h, psi);
            py::dict out;
            out["host"] = res.host;
            out["pattern"] = res.pattern;
            out["model"] = model_to_dict(res.model);
            out["order"] = res.order;
            out["order_promised"] = res.order_promised;
            return out;
        },
        py::arg("h"), py::arg("psi"));
    m.def(
        "xi_from_double_path",
        [](int k, int p_len, const std::vector<int>& perm) {
            auto res = xi_from_double_path(k, p_len, perm);
            py::dict out;
            out["host"] = res.host;
            out["pattern"] = res.pattern;
            out["model"] = model_to_dict(res.model);
            return out;
        },
        py::arg("k"), py::arg("p_len"), py::arg("perm"));

    // sweeps
    m.def(
        "run_sweep",
        [](const std::string& family, int param_min, int param_max, int repeats, int k,
           unsigned seed, long long budget_ms) {
            SweepSpec spec;
            spec.family = family;
            spec.param_min = param_min;
            spec.param_max = param_max;
            spec.repeats = repeats;
            spec.k = k;
            spec.seed = seed;
            spec.budget_ms = budget_ms;
            auto report = run_sweep(spec);
            return py::make_tuple(sweep_to_csv(report), report.any_violation());
        },
        py::arg("family"), py::arg("param_min"), py::arg("param_max"), py::arg("repeats") = 1,
        py::arg("k") = 0, py::arg("seed") = 0, py::arg("budget_ms") = 0,
        "Returns (csv, any_violation).");
    m.def(
        "cross_check",
        [](const std::string& family, int k, const Graph& host, long long budget_ms) {
            auto res = cross_check(bound_family_from_name(family), k, host, budget_ms);
            py::dict out;
            out["family"] = res.family;
            out["k"] = res.k;
            out["treewidth"] = res.treewidth;
            out["bound"] = res.bound_value;
            out["minor"] = outcome_name(res.minor);
            out["vacuous"] = res.vacuous;
            out["applicable"] = res.applicable;
            out["consistent"] = res.consistent;
            return out;
        },
        py::arg("family"), py::arg("k"), py::arg("host"), py::arg("budget_ms") = 0);
}
