#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gamma/error.hpp"
#include "gamma/rational.hpp"

namespace gq {

/// A unit of the ring Q[t,t^-1]: the monomial coeff * t^power with coeff != 0.
struct Unit {
    Rational coeff;
    long power = 0;

    bool operator==(const Unit&) const = default;
};

/// Exact element of Q[t,t^-1].
///
/// Stored densely as a coefficient run starting at the lowest exponent.
/// Invariant: the run is empty (zero polynomial) or its first and last
/// coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

    /// The monomial coeff * t^exp.
    static LaurentPoly monomial(const Rational& coeff, long exp);
    static LaurentPoly t(long exp = 1) { return monomial(1, exp); }
    static LaurentPoly from_terms(const std::map<long, Rational>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    /// True iff the value is a unit of Q[t,t^-1], i.e. a single term.
    bool is_unit() const { return coeffs_.size() == 1; }
    bool is_one() const;

    long low_exp() const;   // lowest exponent with nonzero coefficient
    long high_exp() const;  // highest exponent with nonzero coefficient
    /// high_exp() - low_exp(); units have total degree 0. Errors on zero.
    long total_degree() const;

    Rational coeff(long exp) const;
    const Rational& leading_coeff() const;
    /// Exponent-ascending (exponent, coefficient) pairs.
    std::vector<std::pair<long, Rational>> terms() const;
    size_t term_count() const { return coeffs_.size(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    bool operator==(const LaurentPoly&) const = default;

    LaurentPoly pow(unsigned long e) const;
    /// Multiply by t^k.
    LaurentPoly shifted(long k) const;
    /// The involution t -> t^-1.
    LaurentPoly bar() const;

private:
    void trim();

    long low_ = 0;
    std::vector<Rational> coeffs_;
};

/// Division with remainder, Euclidean for the norm total_degree:
/// a = q*b + r with r = 0 or total_degree(r) < total_degree(b).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Exact division; errors with INEXACT_DIVISION when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Unit-normalized gcd. Errors with BOTH_ZERO when a = b = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical representative modulo units: lowest exponent 0 and monic
/// leading coefficient, with p = unit * normalized.
std::pair<Unit, LaurentPoly> unit_normalize(const LaurentPoly& p);

LaurentPoly involution(const LaurentPoly& p);
long total_degree(const LaurentPoly& p);

std::string format_poly(const LaurentPoly& p);

}  // namespace gq
