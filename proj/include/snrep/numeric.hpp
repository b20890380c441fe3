#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace snrep {

// All exact computations run on arbitrary-precision integers and rationals.
// BigRat is always kept in lowest terms with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// base^exp with the convention 0^0 = 1.
BigInt pow_int(const BigInt& base, int exp);

std::string to_decimal(const BigInt& value);

/// Renders "p/q" in lowest terms, or just "p" for integral values.
std::string to_fraction(const BigRat& value);

/// Parses "p" or "p/q" (q > 0). Throws ParseError on anything else.
BigRat parse_rational(const std::string& text);

BigInt parse_bigint(const std::string& text);

} // namespace snrep
