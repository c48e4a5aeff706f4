#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace bircalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Prints `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses `p`, `-p` or `p/q`. Throws ParseError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace bircalc
