#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace cayley {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always stored in lowest terms with a positive
// denominator (the backend canonicalizes on every operation). Expression
// templates are disabled so `auto` and container storage behave like a
// plain value type.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "p" or "p/q" with q > 0. Throws ParseError on anything else,
// including q == 0 and signs on the denominator.
Rational rat_parse(const std::string& s);

// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rational& q);

// q^e for e >= 0 by repeated multiplication (exponents here are tiny).
Rational rat_pow(const Rational& q, int e);

int rat_sign(const Rational& q);

// Exact integer k-th root of x >= 0, or nullopt when x is not a perfect
// k-th power. k >= 1.
std::optional<Int> int_nth_root(const Int& x, int k);

// Exact rational k-th root. Negative q is allowed for odd k.
std::optional<Rational> rational_nth_root(const Rational& q, int k);

}  // namespace cayley
