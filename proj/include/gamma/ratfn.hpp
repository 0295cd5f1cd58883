#pragma once

#include <string>

#include "gamma/laurent.hpp"

namespace gq {

/// Exact element of the fraction field Q(t).
///
/// Canonical form: gcd(num, den) is a unit and den is unit-normalized
/// (lowest exponent 0, monic). The whole unit ambiguity sits in num.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}
    RationalFn(const Rational& c) : num_(c), den_(1) {}
    RationalFn(long c) : num_(c), den_(1) {}
    RationalFn(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True iff the value lies in Q[t,t^-1].
    bool is_polynomial() const { return den_.is_one(); }

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    bool operator==(const RationalFn&) const = default;

    RationalFn inverse() const;
    RationalFn pow(long e) const;
    /// The involution t -> t^-1 applied to both parts.
    RationalFn bar() const;

private:
    void reduce();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// total_degree(num) - total_degree(den). Errors on zero.
long degree_ratfn(const RationalFn& r);

RationalFn involution(const RationalFn& r);

/// Ambiguity group for unit-class comparisons: modulo +-t^k, or modulo
/// c*t^k with c any nonzero rational.
enum class UnitMode { PM_TK, C_TK };

/// Nonzero value of Q(t) considered up to the ambiguity of `mode`.
struct UnitClass {
    RationalFn value;
    UnitMode mode = UnitMode::PM_TK;
};

/// True iff a/b = +-t^k (PM_TK) or a/b = c*t^k (C_TK).
bool unit_equal(const RationalFn& a, const RationalFn& b, UnitMode mode);
bool unit_equal(const UnitClass& a, const UnitClass& b);

/// Canonical printed representative of the unit class of r: both parts
/// unit-normalized, so the result is well defined modulo c*t^k.
RationalFn unit_class_representative(const RationalFn& r);

std::string format_ratfn(const RationalFn& r);

}  // namespace gq
