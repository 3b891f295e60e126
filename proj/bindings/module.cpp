#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "acymatch/bounds.hpp"
#include "acymatch/cli.hpp"
#include "acymatch/gen.hpp"
#include "acymatch/io.hpp"
#include "acymatch/oracle.hpp"
#include "acymatch/reducer.hpp"

namespace py = pybind11;
using namespace acym;

namespace {

using pairs_t = std::vector<std::pair<int, int>>;

pairs_t edge_pairs(const std::vector<Edge>& edges) {
  pairs_t out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

Matching matching_of(const pairs_t& pairs) { return Matching::from_pairs(pairs); }

py::dict verify_dict(const VerifyResult& vr) {
  py::dict d;
  d["ok"] = vr.ok;
  d["reason"] = vr.reason;
  d["witness_vertices"] = vr.witness_vertices;
  d["witness_edges"] = edge_pairs(vr.witness_edges);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "acyclic matchings in bounded-degree graphs";

  py::register_exception<Error>(m, "AcymatchError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const pairs_t& edges) { return build_graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors",
           [](const Graph& g, int v) {
             auto nb = g.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           },
           py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("max_degree", &Graph::max_degree)
      .def("min_degree", &Graph::min_degree)
      .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); },
        py::arg("text"));
  m.def("read_edge_list", &read_edge_list, py::arg("path"));
  m.def("to_edge_list", &to_edge_list, py::arg("graph"));

  m.def("solve_json",
        [](const Graph& g, bool trace) { return solve_report_json(solve(g), trace).dump(); },
        py::arg("graph"), py::arg("trace") = false,
        "Certified solve; returns the JSON report as a string.");

  m.def("exact_max",
        [](const Graph& g, const std::string& kind, int k, int cap) {
          OracleResult res = exact_max(g, match_kind_from_name(kind), k, cap);
          py::dict d;
          d["optimum"] = res.optimum;
          d["witness"] = edge_pairs(res.witness.edges);
          d["nodes"] = res.nodes_explored;
          return d;
        },
        py::arg("graph"), py::arg("kind") = "acyclic", py::arg("k") = -1, py::arg("cap") = 20);

  m.def("is_matching",
        [](const Graph& g, const pairs_t& mm) { return verify_dict(is_matching(g, matching_of(mm))); },
        py::arg("graph"), py::arg("matching"));
  m.def("is_acyclic_matching",
        [](const Graph& g, const pairs_t& mm) {
          return verify_dict(is_acyclic_matching(g, matching_of(mm)));
        },
        py::arg("graph"), py::arg("matching"));
  m.def("is_induced_matching",
        [](const Graph& g, const pairs_t& mm) {
          return verify_dict(is_induced_matching(g, matching_of(mm)));
        },
        py::arg("graph"), py::arg("matching"));
  m.def("is_k_degenerate_matching",
        [](const Graph& g, const pairs_t& mm, int k) {
          return verify_dict(is_k_degenerate_matching(g, matching_of(mm), k));
        },
        py::arg("graph"), py::arg("matching"), py::arg("k"));
  m.def("is_corona_forest",
        [](const Graph& g, const pairs_t& mm) {
          return verify_dict(is_corona_forest(g, matching_of(mm)));
        },
        py::arg("graph"), py::arg("matching"));

  m.def("greedy_acyclic",
        [](const Graph& g) { return edge_pairs(greedy_acyclic(g).edges); }, py::arg("graph"));

  m.def("cmp_le_plus_sqrt", &cmp_le_plus_sqrt, py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("delta"));
  m.def("meets_thm1", &meets_thm1, py::arg("size"), py::arg("n"), py::arg("delta"));
  m.def("thm1_bound", &thm1_bound, py::arg("n"), py::arg("delta"));
  m.def("joos_bound", &joos_bound, py::arg("n"), py::arg("delta"));
  m.def("edge_lower_bound", &edge_lower_bound, py::arg("m"), py::arg("delta"));
  m.def("regular_upper_bound", &regular_upper_bound, py::arg("m"), py::arg("delta"));
  m.def("kdeg_conjecture_bound", &kdeg_conjecture_bound, py::arg("n"), py::arg("delta"),
        py::arg("k"));
  m.def("kdeg_adapted_coefficient",
        [](int k) {
          Rational r = kdeg_adapted_coefficient(k);
          return std::make_pair(r.num, r.den);
        },
        py::arg("k"));

  m.def("gen_joos", &gen_joos, py::arg("delta"), py::arg("copies") = 1);
  m.def("gen_random_capped", &gen_random_capped, py::arg("n"), py::arg("delta"),
        py::arg("m_target"), py::arg("seed"));
  m.def("gen_path", &gen_path, py::arg("n"));
  m.def("gen_cycle", &gen_cycle, py::arg("n"));
  m.def("gen_complete", &gen_complete, py::arg("n"));
  m.def("gen_complete_bipartite", &gen_complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("gen_random_tree", &gen_random_tree, py::arg("n"), py::arg("seed"));

  m.attr("PRNG_ID") = kPrngId;
}
