#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "distdom/chain.hpp"
#include "distdom/error.hpp"

namespace py = pybind11;
using namespace distdom;

namespace {

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

NumericMode mode_of(bool exact) { return exact ? NumericMode::Exact : NumericMode::Float; }

// Exact values travel as "p/q" strings; the Python side turns them into Fractions.
py::dict lp_dict(const LpSolution& s) {
  py::dict d;
  d["status"] = to_string(s.status);
  d["mode"] = to_string(s.mode);
  d["objective"] = s.objective;
  d["values"] = s.values;
  if (s.exact()) {
    d["exact_objective"] = s.exact_objective.get_str();
    std::vector<std::string> ex;
    for (const auto& q : s.exact_values) ex.push_back(q.get_str());
    d["exact_values"] = ex;
  }
  d["pivots"] = s.pivots;
  return d;
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Ordering ordering_or_default(const Graph& g, const std::optional<std::vector<Vertex>>& seq) {
  return seq ? Ordering::from_sequence(*seq) : heuristic_ordering(g, OrderingStrategy::Degeneracy);
}

py::dict construction_dict(const LabeledConstruction& c) {
  py::dict d;
  d["graph"] = c.graph;
  std::vector<std::string> roles;
  for (auto r : c.roles) roles.push_back(to_string(r));
  d["roles"] = roles;
  d["apex"] = c.apex;
  d["r"] = c.r;
  d["canonical_ordering"] = canonical_ordering(c).sequence();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distance-r domination and independence: LP rounding and bound verification";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        g.check_vertex(v);
        auto s = g.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("degree", [](const Graph& g, Vertex v) {
        g.check_vertex(v);
        return g.degree(v);
      })
      .def("distance", [](const Graph& g, Vertex u, Vertex v) {
        g.check_vertex(u);
        g.check_vertex(v);
        int d = distance(g, u, v);
        return d == kUnreachable ? py::object(py::none()) : py::object(py::int_(d));
      })
      .def("ball", [](const Graph& g, Vertex v, int r) {
        g.check_vertex(v);
        return ball(g, v, r).members();
      })
      .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
      .def("to_dimacs", &to_dimacs)
      .def_static("from_json", [](const std::string& s) { return parse_graph_string(s, GraphFormat::Json); })
      .def_static("from_dimacs", [](const std::string& s) { return parse_graph_string(s, GraphFormat::DimacsEdge); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  py::class_<Augmentation>(m, "Augmentation")
      .def_property_readonly("n", &Augmentation::n)
      .def_property_readonly("radius", &Augmentation::radius)
      .def("arcs", [](const Augmentation& a) {
        std::vector<std::tuple<Vertex, Vertex, int>> out;
        for (const auto& arc : a.arcs()) out.emplace_back(arc.tail, arc.head, arc.rho);
        return out;
      })
      // Max indegree (loop included) for each radius 0..r.
      .def("delta", [](const Augmentation& a) { return indegree_profile(a).delta; })
      .def("verify", [](const Augmentation& a, const Graph& g) {
        auto rep = verify_augmentation(g, a);
        std::vector<std::string> msgs;
        for (const auto& v : rep.violations) msgs.push_back(v.describe());
        return py::make_tuple(rep.ok, msgs);
      }, py::arg("graph"))
      .def_static("from_arcs", [](int n, int r, const std::vector<std::tuple<Vertex, Vertex, int>>& arcs) {
        std::vector<Arc> a;
        for (auto [t, h, rho] : arcs) a.push_back({t, h, rho});
        return Augmentation(n, r, a);
      });

  m.def("heuristic_ordering", [](const Graph& g, const std::string& strategy) {
    return heuristic_ordering(g, parse_ordering_strategy(strategy)).sequence();
  }, py::arg("graph"), py::arg("strategy") = "degeneracy");
  m.def("wcol_of_ordering", [](const Graph& g, std::vector<Vertex> seq, int k) {
    return wcol_of_ordering(g, Ordering::from_sequence(std::move(seq)), k);
  }, py::arg("graph"), py::arg("ordering"), py::arg("k"));
  m.def("weakly_reachable", [](const Graph& g, std::vector<Vertex> seq, Vertex v, int k) {
    g.check_vertex(v);
    return weak_reach(g, Ordering::from_sequence(std::move(seq)), k).weakly_reachable(v, k).members();
  }, py::arg("graph"), py::arg("ordering"), py::arg("v"), py::arg("k"));
  m.def("degeneracy", &degeneracy);

  m.def("augment_from_ordering", [](const Graph& g, std::vector<Vertex> seq, int r) {
    return augment_from_ordering(g, Ordering::from_sequence(std::move(seq)), r);
  }, py::arg("graph"), py::arg("ordering"), py::arg("r"));
  m.def("orientation_augmentation", [](const Graph& g, const std::vector<Edge>& arcs) {
    return orientation_augmentation(g, arcs);
  }, py::arg("graph"), py::arg("orientation"));
  m.def("guarantee_factor", [](const Augmentation& a, int r) { return guarantee_factor(indegree_profile(a), r).a; },
        py::arg("augmentation"), py::arg("r"));

  m.def("solve_domination", [](const Graph& g, int r, bool exact) { return lp_dict(solve_domination(g, r, mode_of(exact))); },
        py::arg("graph"), py::arg("r"), py::arg("exact") = true);
  m.def("solve_independence", [](const Graph& g, int r, bool exact) { return lp_dict(solve_independence(g, r, mode_of(exact))); },
        py::arg("graph"), py::arg("r"), py::arg("exact") = true);

  m.def("round_dominating", [](const Graph& g, const Augmentation& aug, bool exact, const std::string& sweep,
                               std::optional<std::vector<Vertex>> ordering, std::uint64_t seed) {
    auto x = solve_domination(g, aug.radius(), mode_of(exact));
    auto order = ordering_or_default(g, ordering);
    RoundingOptions opts;
    opts.record_trace = true;
    auto res = round_dominating(g, aug, x, make_sweep(parse_sweep_order(sweep), order, seed), opts);
    return from_json(domination_result_to_json(res));
  }, py::arg("graph"), py::arg("augmentation"), py::arg("exact") = true, py::arg("sweep") = "augmentation",
     py::arg("ordering") = py::none(), py::arg("seed") = 7);

  m.def("out_bounded_set", [](const Graph& g, const Augmentation& aug, const std::string& strategy, bool exact) {
    auto res = out_bounded_set(g, aug, parse_matching_strategy(strategy), mode_of(exact));
    py::dict d;
    d["y"] = res.y.members();
    d["k"] = res.k;
    d["matching"] = res.matching.selected;
    d["out_counts"] = res.out_counts;
    d["packing"] = lp_dict(res.packing);
    return d;
  }, py::arg("graph"), py::arg("augmentation"), py::arg("strategy") = "exact", py::arg("exact") = true);
  m.def("certify_2rb_independent", [](const Graph& g, std::vector<Vertex> y, int r, std::int64_t b) {
    auto c = certify_2rb_independent(g, VertexSet(std::move(y)), r, b);
    return py::make_tuple(c.ok, c.count, c.worst_vertex);
  }, py::arg("graph"), py::arg("y"), py::arg("r"), py::arg("b"));
  m.def("sparsify_to_independent", [](const Graph& g, const Augmentation& aug2r, std::vector<Vertex> y, std::int64_t b) {
    auto s = sparsify_to_independent(g, aug2r, VertexSet(std::move(y)), b);
    py::dict d;
    d["y1"] = s.y1.members();
    d["d"] = s.d;
    d["colors"] = s.colors;
    return d;
  }, py::arg("graph"), py::arg("augmentation_2r"), py::arg("y"), py::arg("b"));

  m.def("clique_construction", [](int n, int r) { return construction_dict(build_h_r(clique_hypergraph(n), r)); },
        py::arg("n"), py::arg("r"));
  m.def("covering_hard_construction", [](int n, int r) {
    return construction_dict(build_h_r(covering_hard_hypergraph(n), r));
  }, py::arg("n"), py::arg("r"));
  m.def("grid_graph", &grid_graph, py::arg("rows"), py::arg("cols"));
  m.def("cycle_graph", &cycle_graph);
  m.def("path_graph", &path_graph);
  m.def("random_degenerate", [](int n, int d, std::uint64_t seed) {
    auto inst = random_degenerate(n, d, seed);
    return py::make_tuple(inst.graph, inst.orientation);
  }, py::arg("n"), py::arg("d"), py::arg("seed"));

  m.def("brute_gamma", [](const Graph& g, int r, int max_vertices) {
    OracleBudget b;
    b.max_vertices = max_vertices;
    auto w = brute_gamma_r(g, r, b);
    return py::make_tuple(w.value, w.witness.members());
  }, py::arg("graph"), py::arg("r"), py::arg("max_vertices") = 14);
  m.def("brute_alpha", [](const Graph& g, int r, int max_vertices) {
    OracleBudget b;
    b.max_vertices = max_vertices;
    auto w = brute_alpha_2r(g, r, b);
    return py::make_tuple(w.value, w.witness.members());
  }, py::arg("graph"), py::arg("r"), py::arg("max_vertices") = 14);
  m.def("brute_wcol", [](const Graph& g, int k) {
    auto w = brute_wcol(g, k);
    return py::make_tuple(w.value, w.ordering.sequence());
  }, py::arg("graph"), py::arg("k"));

  m.def("analyze", [](const Graph& g, int r, bool oracles, const std::string& id) {
    CorpusInstance inst;
    inst.id = id;
    inst.graph = g;
    inst.r = r;
    AnalyzeOptions opts;
    opts.oracles = oracles;
    return from_json(report_to_json(analyze(inst, opts), false));
  }, py::arg("graph"), py::arg("r") = 1, py::arg("oracles") = true, py::arg("id") = "graph");
  m.def("analyze_instance_file", [](const std::string& path, bool oracles) {
    AnalyzeOptions opts;
    opts.oracles = oracles;
    return from_json(report_to_json(analyze(load_instance(path), opts), false));
  }, py::arg("path"), py::arg("oracles") = true);
}
