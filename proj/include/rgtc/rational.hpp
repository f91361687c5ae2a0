#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rgtc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a/b" or an integer "a". Decimal points are rejected so that
// probabilities stay exact end to end.
Rational parse_rational(std::string_view text);

// Like parse_rational but also accepts finite decimals ("0.25" -> 1/4).
// Used for real-valued parameters such as epsilon.
Rational parse_decimal(std::string_view text);

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& x);

long double to_long_double(const Rational& x);

BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned k);
Rational pow(const Rational& base, unsigned exp);

}  // namespace rgtc
