#include "cayley/rational.hpp"

#include <cctype>

#include "cayley/error.hpp"

namespace cayley {

Rational rat_parse(const std::string& s) {
    // Strict wire format: [+-]?digits(/digits)?  with nonzero denominator.
    std::size_t i = 0;
    auto fail = [&]() -> Rational { throw ParseError("bad rational literal: '" + s + "'"); };
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) return fail();
    Int num(s.substr(num_begin, i - num_begin));
    if (neg) num = -num;
    Int den = 1;
    if (i < s.size()) {
        if (s[i] != '/') return fail();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) return fail();
        den = Int(s.substr(den_begin, i - den_begin));
        if (den == 0) return fail();
    }
    return Rational(num, den);
}

std::string rat_str(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rat_pow(const Rational& q, int e) {
    if (e < 0) throw PreconditionError("rat_pow: negative exponent");
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

int rat_sign(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

std::optional<Int> int_nth_root(const Int& x, int k) {
    if (k < 1) throw PreconditionError("int_nth_root: k must be >= 1");
    if (x < 0) throw PreconditionError("int_nth_root: x must be >= 0");
    if (x == 0 || x == 1 || k == 1) return x;
    Int lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(k)) < x) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        Int p = boost::multiprecision::pow(mid, static_cast<unsigned>(k));
        if (p == x) return mid;
        if (p < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (boost::multiprecision::pow(lo, static_cast<unsigned>(k)) == x) return lo;
    return std::nullopt;
}

std::optional<Rational> rational_nth_root(const Rational& q, int k) {
    if (k < 1) throw PreconditionError("rational_nth_root: k must be >= 1");
    if (q == 0) return Rational(0);
    bool neg = q < 0;
    if (neg && k % 2 == 0) return std::nullopt;
    Rational a = neg ? Rational(-q) : q;
    auto rn = int_nth_root(numerator(a), k);
    if (!rn) return std::nullopt;
    auto rd = int_nth_root(denominator(a), k);
    if (!rd) return std::nullopt;
    Rational r(*rn, *rd);
    return neg ? Rational(-r) : r;
}

}  // namespace cayley
