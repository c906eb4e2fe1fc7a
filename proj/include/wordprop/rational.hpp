#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace wordprop {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

/// Accepts "p", "p/q" and "-p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace wordprop
