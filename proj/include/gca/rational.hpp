#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gca {

// Exact arbitrary-precision rational. Every trace value and every linear
// feasibility computation runs on these; there is no floating point anywhere
// in the library.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q" or "-p/q". Throws Error on anything else (q = 0 included).
Rational parse_rational(const std::string& text);

// Lowest terms, "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

}  // namespace gca
