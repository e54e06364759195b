#pragma once

#include <string>

#include <gmpxx.h>

namespace mqs {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q"; throws ParseError on anything else or q = 0.
Rational parse_rational(const std::string &s);
std::string to_string(const Rational &q);

inline Rational frac(long a, long b) {
    Rational q{Integer(a), Integer(b)};
    q.canonicalize();
    return q;
}

Rational factorial(long n);
Rational pow2(long n);
inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace mqs
