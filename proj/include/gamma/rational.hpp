#pragma once

#include <gmpxx.h>

#include <string>

namespace gq {

// Exact rational numbers with arbitrary-precision integer parts.
// mpq_class keeps gcd(num, den) = 1 and den > 0 once canonicalized,
// which is exactly the invariant we need.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string rational_to_string(const Rational& q);

}  // namespace gq
