#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace nilbohr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest integer <= r.
BigInt floor_of(const Rational& r);

// r reduced into [0, 1).
Rational mod1(const Rational& r);

// num/den as a canonical rational; throws PreconditionViolated on den == 0.
Rational make_rational(BigInt num, BigInt den);

// Accepts "p/q" or a bare integer "p". Whitespace is not allowed.
Rational parse_rational(std::string_view text);

// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& r);

}  // namespace nilbohr
