#include "common.hpp"

#include "wordprop/catalog.hpp"
#include "wordprop/property.hpp"

PYBIND11_MODULE(_core, m) {
  m.doc() = "Word maps on finite groups: satisfaction probabilities and the w_{m,n}-property";

  auto value_error = py::handle(PyExc_ValueError);
  py::register_exception<wordprop::GroupError>(m, "GroupError", value_error);
  py::register_exception<wordprop::WordError>(m, "WordError", value_error);
  py::register_exception<wordprop::FileFormatError>(m, "FileFormatError", value_error);
  py::register_exception<wordprop::InfeasibleEnumeration>(m, "InfeasibleEnumeration");

  define_groups(m);
  define_words(m);
  define_graphs(m);
}
