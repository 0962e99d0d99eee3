#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ferrers/bounds.hpp"
#include "ferrers/constructions.hpp"
#include "ferrers/error.hpp"
#include "ferrers/recognition.hpp"
#include "ferrers/solver.hpp"

namespace py = pybind11;
using namespace ferrers;

namespace {

using Parts = std::vector<std::vector<EdgeId>>;

std::vector<std::pair<int, int>> edge_pairs(const BipartiteGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

BipartiteGraph make_graph(int u_count, int v_count, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return BipartiteGraph(u_count, v_count, std::move(es));
}

SolverOptions solver_options(int cap, int jobs, bool leaf_check_only) {
  SolverOptions o;
  o.edge_cap = cap;
  o.jobs = jobs;
  o.leaf_check_only = leaf_check_only;
  return o;
}

py::dict certificate_dict(const FerrersCertificate& c) {
  py::dict d;
  d["ferrers"] = c.ferrers;
  d["u_order"] = c.u_order;
  d["v_order"] = c.v_order;
  if (c.witness)
    d["witness"] = py::make_tuple(c.witness->u, c.witness->v, c.witness->u2, c.witness->v2);
  else
    d["witness"] = py::none();
  return d;
}

FamilySpec family_from(const std::string& kind, const std::vector<int>& params) {
  bool kmn = kind == "kmn-minus-matching" || kind == "kmn";
  std::size_t arity = kmn ? 3 : 1;
  if (params.size() != arity)
    throw InputError("family '" + kind + "' takes " + std::to_string(arity) + " parameter(s)");
  if (kmn) return FamilySpec::complete_minus_matching(params[0], params[1], params[2]);
  if (kind == "path") return FamilySpec::path(params[0]);
  if (kind == "cycle") return FamilySpec::cycle(params[0]);
  if (kind == "ladder") return FamilySpec::ladder(params[0]);
  if (kind == "crown") return FamilySpec::crown(params[0]);
  throw InputError("unknown family '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_ferrers, m) {
  m.doc() = "Ferrers partition number toolkit for bipartite graphs";

  py::register_exception<SizeCapExceeded>(m, "SizeCapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<BipartiteGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("u_count"), py::arg("v_count"), py::arg("edges"))
      .def_property_readonly("u_count", &BipartiteGraph::u_count)
      .def_property_readonly("v_count", &BipartiteGraph::v_count)
      .def_property_readonly("edge_count", &BipartiteGraph::edge_count)
      .def_property_readonly("edges", &edge_pairs, "edges as (u, v) pairs, indexed by edge id")
      .def("edge_id", &BipartiteGraph::edge_id, py::arg("u"), py::arg("v"))
      .def("to_edge_list", &to_edge_list)
      .def("to_matrix", [](const BipartiteGraph& g) { return to_matrix_text(to_matrix(g)); })
      .def("__eq__", [](const BipartiteGraph& a, const BipartiteGraph& b) { return a == b; })
      .def("__repr__", [](const BipartiteGraph& g) {
        return "Graph(u_count=" + std::to_string(g.u_count()) + ", v_count=" + std::to_string(g.v_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("generate", [](const std::string& kind, const std::vector<int>& params) {
        return generate(family_from(kind, params));
      },
      py::arg("kind"), py::arg("params"), "Named family graph, e.g. generate('crown', [4]).");
  m.def("disjoint_union", [](const std::vector<BipartiteGraph>& gs) { return disjoint_union(gs); });
  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("parse_matrix", [](const std::string& text) { return from_matrix(parse_matrix(text)); });

  m.def("is_ferrers", [](const BipartiteGraph& g, std::optional<std::vector<EdgeId>> part) {
        return certificate_dict(part ? is_ferrers(g, *part) : is_ferrers(g));
      },
      py::arg("graph"), py::arg("part") = py::none(),
      "Certificate for the whole graph or for a subset of edge ids.");

  m.def("bounds", [](const BipartiteGraph& g, bool exact_chi) {
        auto r = compute_bounds(g, {exact_chi});
        py::dict d;
        d["nu_ind"] = r.nu_ind.size;
        d["induced_matching"] = r.nu_ind.edges;
        d["width_u"] = r.width_u.width;
        d["width_v"] = r.width_v.width;
        d["conflict_edges"] = r.conflict_edges;
        d["conflict_clique"] = r.conflict_clique;
        d["chi_conflict"] = r.chi_conflict ? py::cast(r.chi_conflict->colors) : py::none();
        d["lower_bound"] = r.lower_bound();
        d["upper_bound"] = r.upper_bound();
        d["upper_partition"] = r.upper_partition.parts();
        return d;
      },
      py::arg("graph"), py::arg("exact_chi") = true);

  m.def("fp_exact", [](const BipartiteGraph& g, int cap, int jobs, bool leaf_check_only) {
        FpResult r;
        {
          py::gil_scoped_release release;
          r = fp_exact(g, solver_options(cap, jobs, leaf_check_only));
        }
        py::dict d;
        d["value"] = r.value;
        d["partition"] = r.witness.parts();
        d["lower"] = r.lower;
        d["upper"] = r.upper;
        d["nodes"] = r.stats.nodes;
        return d;
      },
      py::arg("graph"), py::arg("cap") = 40, py::arg("jobs") = 1, py::arg("leaf_check_only") = false);

  m.def("decide_k", [](const BipartiteGraph& g, int k, int jobs) -> std::optional<Parts> {
        std::optional<EdgePartition> p;
        {
          py::gil_scoped_release release;
          p = decide_k(g, k, solver_options(SolverOptions{}.edge_cap, jobs, false));
        }
        if (!p) return std::nullopt;
        return p->parts();
      },
      py::arg("graph"), py::arg("k"), py::arg("jobs") = 1);

  m.def("fp_bruteforce", &fp_bruteforce, py::arg("graph"));

  m.def("verify_partition", [](const BipartiteGraph& g, const Parts& parts) {
        auto v = verify_partition(g, EdgePartition(parts));
        return v.ok() ? std::string("ok") : v.describe(g);
      },
      py::arg("graph"), py::arg("parts"), "Returns 'ok' or a description of the first violation.");

  m.def("path_partition", [](int n) { return path_partition(n).parts(); });
  m.def("cycle_partition", [](int n) { return cycle_partition(n).parts(); });
  m.def("crown_partition", [](int n) { return crown_partition(n).parts(); });
  m.def("ladder_partition", [](int n) { return ladder_partition(n).parts(); });
  m.def("kmn_minus_matching_partition", [](int mm, int n, int t) { return kmn_minus_matching_partition(mm, n, t).parts(); });
}
