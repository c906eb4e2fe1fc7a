#include <pybind11/stl.h>

#include "common.hpp"
#include "wordprop/bounds.hpp"
#include "wordprop/property.hpp"
#include "wordprop/wordgraph.hpp"

using namespace wordprop;

namespace {

OverlapPolicy policy_arg(const std::string& text) { return parse_overlap_policy(text); }

GapConstant gap_arg(const py::handle& gamma) {
  return {from_fraction(gamma), GapConstant::Source::kUserSupplied};
}

py::dict report_dict(const BoundReport& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["lhs"] = to_fraction(r.lhs);
  d["rhs"] = to_fraction(r.rhs);
  d["context"] = r.context;
  return d;
}

}  // namespace

void define_graphs(py::module_& m) {
  py::class_<WordGraph>(m, "WordGraph")
      .def(py::init(&WordGraph::build), py::arg("group"), py::arg("word"))
      .def_static("from_arcs", &WordGraph::from_arcs, py::arg("vertex_count"), py::arg("arcs"),
                  py::arg("name") = "digraph")
      .def_property_readonly("vertex_count", &WordGraph::vertex_count)
      .def_property_readonly("arc_count", &WordGraph::arc_count)
      .def("has_arc", &WordGraph::has_arc)
      .def("out_degree", [](const WordGraph& g, Element a) { return g.out_neighborhood(a).count(); })
      .def("is_loop_free", &WordGraph::is_loop_free)
      .def("is_symmetric", &WordGraph::is_symmetric)
      .def("to_dot", &export_dot);

  m.def(
      "probability", [](const WordGraph& g) { return to_fraction(satisfaction_probability(g)); }, py::arg("graph"));

  py::class_<PropertyResult>(m, "PropertyResult")
      .def_readonly("has_property", &PropertyResult::has_property)
      .def_readonly("witness_m", &PropertyResult::witness_m)
      .def_readonly("witness_n", &PropertyResult::witness_n)
      .def_readonly("subsets_examined", &PropertyResult::subsets_examined)
      .def("__bool__", [](const PropertyResult& r) { return r.has_property; });

  m.def(
      "has_wmn_property",
      [](const WordGraph& g, std::size_t m_, std::size_t n, const std::string& policy) {
        return has_wmn_property(g, {m_, n, policy_arg(policy)});
      },
      py::arg("graph"), py::arg("m"), py::arg("n"), py::arg("policy") = "allow_overlap");
  m.def(
      "naive_oracle",
      [](const WordGraph& g, std::size_t m_, std::size_t n, const std::string& policy) {
        return naive_oracle(g, {m_, n, policy_arg(policy)});
      },
      py::arg("graph"), py::arg("m"), py::arg("n"), py::arg("policy") = "allow_overlap");
  m.def(
      "property_frontier",
      [](const WordGraph& g, std::size_t m_, const std::string& policy) {
        return property_frontier(g, m_, policy_arg(policy));
      },
      py::arg("graph"), py::arg("m"), py::arg("policy") = "allow_overlap");

  m.def(
      "kst_bound_holds",
      [](std::uint64_t t, std::uint64_t r, std::uint64_t s, std::uint64_t edges) {
        return report_dict(kst_bound_holds(t, r, s, edges));
      },
      py::arg("t"), py::arg("r"), py::arg("s"), py::arg("edges"));
  m.def(
      "main_bound",
      [](const py::handle& gamma, std::uint64_t m_, std::uint64_t n) {
        return to_fraction(main_bound(gap_arg(gamma), m_, n));
      },
      py::arg("gamma"), py::arg("m"), py::arg("n"));
  m.def(
      "main_bound_holds",
      [](std::uint64_t order, const py::handle& gamma, std::uint64_t m_, std::uint64_t n) {
        return report_dict(main_bound_holds(order, gap_arg(gamma), m_, n));
      },
      py::arg("order"), py::arg("gamma"), py::arg("m"), py::arg("n"));
  m.def(
      "derivation_chain_holds",
      [](std::uint64_t t, std::uint64_t eta, const py::handle& gamma, std::uint64_t m_, std::uint64_t n) {
        return report_dict(derivation_chain_holds(t, eta, from_fraction(gamma), m_, n));
      },
      py::arg("t"), py::arg("eta"), py::arg("gamma"), py::arg("m"), py::arg("n"));
}
