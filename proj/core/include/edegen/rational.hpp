#ifndef EDEGEN_RATIONAL_HPP
#define EDEGEN_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace edegen {

// Geometric predicates (realizability, MLE existence, cone membership,
// distances to alpha) are evaluated in exact arithmetic. Floating point
// only appears at the reporting layer.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a decimal literal ("-0.15", "3e-2") into an
/// exact rational. Decimal text is read digit by digit, so "0.3" is exactly
/// 3/10 rather than the nearest double.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace edegen

#endif  // EDEGEN_RATIONAL_HPP
