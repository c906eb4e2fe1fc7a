#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "common.hpp"
#include "wordprop/catalog.hpp"

using namespace wordprop;

void define_groups(py::module_& m) {
  py::class_<Group>(m, "Group")
      .def_static("from_cayley_table", &Group::from_cayley_table, py::arg("table"), py::arg("name") = "G")
      .def_static("from_permutations", &Group::from_permutation_generators, py::arg("points"),
                  py::arg("generators"), py::arg("name") = "G", py::arg("order_cap") = kDefaultOrderCap)
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("name", &Group::name)
      .def_property_readonly("identity", &Group::identity)
      .def("multiply", &Group::multiply)
      .def("inverse", &Group::inverse)
      .def("is_abelian", &Group::is_abelian)
      .def("center", &Group::center)
      .def("table", &Group::table)
      .def("__len__", &Group::order)
      .def("__eq__", [](const Group& a, const Group& b) { return a == b; })
      .def("__repr__", [](const Group& g) { return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">"; });

  m.def("cyclic_group", &cyclic_group, py::arg("n"), py::arg("name") = "");
  m.def("direct_product", &direct_product, py::arg("g"), py::arg("h"), py::arg("order_cap") = kDefaultOrderCap);
  m.def(
      "builtin",
      [](const std::string& family, std::vector<std::uint32_t> params) {
        return builtin(parse_family(family), std::move(params));
      },
      py::arg("family"), py::arg("params") = std::vector<std::uint32_t>{});
  m.def(
      "default_catalog",
      [](std::size_t max_order) {
        std::vector<Group> out;
        for (const auto& entry : default_catalog(max_order)) out.push_back(build(entry));
        return out;
      },
      py::arg("max_order"));
  m.def("load_group", [](const std::filesystem::path& p) { return load_group(p); });
  m.def("save_group", [](const Group& g, const std::filesystem::path& p) { save_group(g, p); });
}
