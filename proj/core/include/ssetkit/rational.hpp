#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ssetkit {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Canonical "num/den" form; the denominator is always printed ("3/1").
std::string to_string(const Rational& value);

/// Accepts "n", "n/d" and finite decimals such as "0.125".
Rational parse_rational(std::string_view text);

/// Smallest integer not below `value`.
Integer ceil(const Rational& value);

double to_double(const Rational& value);

}  // namespace ssetkit
