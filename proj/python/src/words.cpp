#include <pybind11/stl.h>

#include "common.hpp"
#include "wordprop/word.hpp"

using namespace wordprop;

void define_words(py::module_& m) {
  py::class_<Word>(m, "Word")
      .def("__len__", &Word::length)
      .def("__str__", &Word::to_string)
      .def("__repr__", [](const Word& w) { return "<Word " + w.to_string() + ">"; })
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("inverse", &Word::inverse)
      .def_property_readonly("source", &Word::source);

  m.def("parse_word", [](const std::string& text) { return parse_word(text); }, py::arg("text"));
  m.def("named_word", [](const std::string& name) { return named_word(name); }, py::arg("name"));
  m.def(
      "evaluate", [](const Word& w, const Group& g, Element x, Element y) { return evaluate(w, g, {x, y}); },
      py::arg("word"), py::arg("group"), py::arg("x"), py::arg("y"));
  m.def("is_identity_in", &is_identity_in, py::arg("word"), py::arg("group"));
}
