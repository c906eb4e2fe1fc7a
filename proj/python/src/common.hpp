#pragma once

#include <pybind11/pybind11.h>

#include "wordprop/rational.hpp"

namespace py = pybind11;

void define_groups(py::module_& m);
void define_words(py::module_& m);
void define_graphs(py::module_& m);

// Exact rationals cross the boundary as fractions.Fraction.
inline py::object to_fraction(const wordprop::Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(wordprop::format_rational(r)));
}

inline wordprop::Rational from_fraction(const py::handle& value) {
  return wordprop::parse_rational(py::str(value).cast<std::string>());
}
