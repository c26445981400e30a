#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace infnet {

// Arbitrary-precision exact rational; all interval geometry is done in it.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "7", "-3/4" and finite decimals such as "2.5" or "-0.125".
Rational parse_rational(std::string_view text);

// Lowest terms, "n" for integers and "n/d" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Exact square root when the value is the square of a rational, else nullopt.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace infnet
