#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace curv {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational; all curvature values, weights and measures stay in this type
// end to end and are converted to decimal only at reporting boundaries.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3", "-3", "5/2", "2.5", ".25", "-0.125". Throws std::invalid_argument
// on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

// Canonical exact form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

// Fixed-point decimal with `digits` fraction digits, rounding half away from zero.
std::string format_decimal(const Rational& r, int digits = 6);

// Largest integer <= r.
BigInt floor_rational(const Rational& r);

} // namespace curv
