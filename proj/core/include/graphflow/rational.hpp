#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphflow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Always "p/q" with q > 0, including integers ("3/1").
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q", "p", with optional leading sign. Throws Error(Parse).
Rational parse_rational(std::string_view text);

}  // namespace graphflow
