#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubham/analysis.hpp"
#include "cubham/canon.hpp"
#include "cubham/constructions.hpp"
#include "cubham/cuts.hpp"
#include "cubham/formats.hpp"
#include "cubham/generator.hpp"
#include "cubham/hamsolver.hpp"
#include "cubham/reduction.hpp"

namespace py = pybind11;
using namespace cubham;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

CubicGraph from_pairs(int n, const EdgeList& pairs) {
  std::vector<Edge> es;
  for (auto [u, v] : pairs) es.push_back({u, v});
  return CubicGraph::from_edges(n, es);
}

EdgeList to_pairs(const std::vector<Edge>& es) {
  EdgeList out;
  for (const auto& e : es) out.emplace_back(e.u, e.v);
  return out;
}

Multigraph multigraph_of(int n, const EdgeList& pairs) {
  std::vector<Edge> es;
  for (auto [u, v] : pairs) es.push_back({u, v});
  return Multigraph::from_edges(n, es);
}

std::optional<std::vector<int>> order_of(const std::optional<HamCycle>& c) {
  if (!c) return std::nullopt;
  return c->order;
}

}  // namespace

PYBIND11_MODULE(_cubham, m) {
  m.doc() = "Hamiltonicity tools for cubic bipartite graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<CubicGraph>(m, "Graph")
      .def(py::init(&from_pairs), py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_any(s); })
      .def("graph6", &write_graph6)
      .def_property_readonly("order", &CubicGraph::order)
      .def_property_readonly("size", &CubicGraph::size)
      .def("edges", [](const CubicGraph& g) { return to_pairs(g.edges()); })
      .def("neighbors", [](const CubicGraph& g, int v) {
        auto s = g.neighbors(v);
        return std::vector<int>(s.begin(), s.end());
      })
      .def("edge_id", &CubicGraph::edge_id)
      .def("is_cubic", &CubicGraph::is_cubic)
      .def("__eq__", [](const CubicGraph& a, const CubicGraph& b) { return a == b; })
      .def("__repr__", [](const CubicGraph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("canonical_form", [](const CubicGraph& g) { return canonical_form(g); });
  m.def("girth", &girth);
  m.def("is_bipartite", [](const CubicGraph& g) { return try_bipartition(g).has_value(); });
  m.def("bipartition", [](const CubicGraph& g) -> std::optional<std::vector<int>> {
    auto b = try_bipartition(g);
    if (!b) return std::nullopt;
    return std::vector<int>(b->color.begin(), b->color.end());
  });
  m.def("is_connected", &is_connected);
  m.def("is_3_connected", &is_3_connected);
  m.def("cyclic_connectivity", &cyclic_connectivity);
  m.def("cyclic_cuts", [](const CubicGraph& g, int k) {
    std::vector<std::vector<int>> out;
    for (const auto& c : find_cyclic_cuts(g, k)) out.push_back(c.edges);
    return out;
  });

  m.def("is_hamiltonian", &is_hamiltonian, py::call_guard<py::gil_scoped_release>());
  m.def(
      "hamiltonian_cycle", [](const CubicGraph& g) { return order_of(find_hamiltonian_cycle(g)); },
      py::call_guard<py::gil_scoped_release>(), "Vertex order of a hamiltonian cycle, or None.");
  m.def(
      "solve",
      [](const CubicGraph& g, std::vector<int> yes, std::vector<int> no, std::uint64_t node_limit) {
        SolveOptions o;
        o.node_limit = node_limit;
        auto r = solve(g, yes, no, o);
        const char* s = r.status == SolveStatus::Found ? "HAM" : r.status == SolveStatus::None ? "NONHAM" : "UNDECIDED";
        return py::make_tuple(s, order_of(r.cycle), r.nodes);
      },
      py::arg("g"), py::arg("yes") = std::vector<int>{}, py::arg("no") = std::vector<int>{},
      py::arg("node_limit") = 0,
      "Returns (status, cycle or None, nodes). yes/no are edge ids the cycle must use or avoid.");
  m.def("cycle_through_avoiding",
        [](const CubicGraph& g, int e1, int e2) { return order_of(cycle_through_avoiding(g, e1, e2)); });
  m.def(
      "count_hamiltonian_cycles",
      [](const CubicGraph& g) { return enumerate_hamiltonian_cycles(g).size(); },
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "generate",
      [](int n, int girth, int connectivity, bool bipartite, int shard, int shards) {
        GenOptions o;
        o.n = n;
        o.min_girth = girth;
        o.min_connectivity = connectivity;
        o.bipartite = bipartite;
        o.shard = shard;
        o.shards = shards;
        return generate_all(o);
      },
      py::arg("n"), py::arg("girth") = 4, py::arg("connectivity") = 1, py::arg("bipartite") = true,
      py::arg("shard") = 0, py::arg("shards") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "five_pieces",
      [](int n) {
        std::vector<CubicGraph> out;
        generate_5pieces(n, [&](const FivePiece& p) { out.push_back(p.graph); });
        return out;
      },
      py::call_guard<py::gil_scoped_release>());
  m.def("piece_class", [](const CubicGraph& g) {
    auto c = piece_class(make_five_piece(g));
    return py::make_tuple(c.cls, c.c1_minus_c2);
  });
  m.def(
      "edge_types",
      [](const CubicGraph& g, bool literal) {
        std::vector<std::pair<bool, bool>> out;
        for (const auto& r : classify_edges(g, literal ? Type1Rule::SomeUncovered : Type1Rule::AtMostTwoCovered)) {
          out.emplace_back(r.type1, r.type2);
        }
        return out;
      },
      py::arg("g"), py::arg("literal_type1") = false, "(type1, type2) per edge id.");
  m.def("forced_forbidden", [](const CubicGraph& g) {
    auto f = forced_forbidden(g);
    return py::make_tuple(f.forced, f.forbidden);
  });

  m.def("reduction_sites", [](const CubicGraph& g) { return find_reducible_sites(g).size(); });
  m.def("is_reducible", &is_reducible);

  m.def(
      "triple_operation",
      [](const CubicGraph& base, int v, std::pair<int, int> e, int m_order, const EdgeList& m_edges) {
        return triple_operation({base, v, Edge{e.first, e.second}, multigraph_of(m_order, m_edges)});
      },
      py::arg("base"), py::arg("v"), py::arg("e"), py::arg("m_order"), py::arg("m_edges"));
  m.def("triple_pairs", [](const CubicGraph& g) {
    std::vector<std::tuple<int, int, int>> out;
    for (auto [v, e] : triple_pairs(g)) {
      const Edge& ed = g.edge(e);
      Edge xy = ed;
      if (!validate_triple_spec({g, v, xy, multigraph_of(2, {{0, 1}, {0, 1}, {0, 1}})}).ok) std::swap(xy.u, xy.v);
      out.emplace_back(v, xy.u, xy.v);
    }
    return out;
  });
  m.def("inflate", &inflate);
  m.def("named_graph", [](const std::string& key) { return named_graph(key); });
  m.def("named_graphs", [] {
    std::vector<py::dict> out;
    for (const auto& i : named_graphs()) {
      py::dict d;
      d["key"] = i.key;
      d["hog_id"] = i.hog_id;
      d["order"] = i.order;
      d["hamiltonian"] = i.hamiltonian;
      d["available"] = i.available;
      out.push_back(d);
    }
    return out;
  });
}
