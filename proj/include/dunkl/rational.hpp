#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dunkl {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q". Whitespace around the literal is ignored.
/// Throws InvalidInput on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

/// n/d in lowest terms. mpq_class(n, d) alone does not reduce, and GMP
/// arithmetic assumes reduced operands.
inline Rational make_rational(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Value of an integral rational as a long; caller checks is_integer first.
long to_long(const Rational& q);

Rational binomial(long n, long k);
Rational factorial(long n);

} // namespace dunkl
