#include "gamma/ratfn.hpp"

namespace gq {

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) fail(Errc::DIVISION_BY_ZERO, "rational function with zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    auto [u, n] = unit_normalize(den_);
    den_ = n;
    // Fold the denominator's unit into the numerator.
    LaurentPoly inv_unit = LaurentPoly::monomial(Rational(1) / u.coeff, -u.power);
    num_ *= inv_unit;
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::inverse() const {
    if (is_zero()) fail(Errc::DIVISION_BY_ZERO, "inverse of zero rational function");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFn result(1);
    RationalFn base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

RationalFn RationalFn::bar() const {
    if (is_zero()) return RationalFn();
    return RationalFn(num_.bar(), den_.bar());
}

long degree_ratfn(const RationalFn& r) {
    if (r.is_zero()) fail(Errc::ZERO_POLYNOMIAL, "degree of zero rational function");
    return r.num().total_degree() - r.den().total_degree();
}

RationalFn involution(const RationalFn& r) { return r.bar(); }

bool unit_equal(const RationalFn& a, const RationalFn& b, UnitMode mode) {
    if (a.is_zero() || b.is_zero()) fail(Errc::ZERO_INPUT, "unit_equal on zero value");
    RationalFn q = a / b;
    if (!q.is_polynomial() || !q.num().is_unit()) return false;
    if (mode == UnitMode::C_TK) return true;
    const Rational c = q.num().leading_coeff();
    return c == 1 || c == -1;
}

bool unit_equal(const UnitClass& a, const UnitClass& b) {
    UnitMode mode = (a.mode == UnitMode::C_TK || b.mode == UnitMode::C_TK) ? UnitMode::C_TK : UnitMode::PM_TK;
    return unit_equal(a.value, b.value, mode);
}

RationalFn unit_class_representative(const RationalFn& r) {
    if (r.is_zero()) fail(Errc::ZERO_INPUT, "unit class of zero");
    LaurentPoly n = unit_normalize(r.num()).second;
    LaurentPoly d = unit_normalize(r.den()).second;
    return RationalFn(n, d);
}

std::string format_ratfn(const RationalFn& r) {
    if (r.is_polynomial()) return format_poly(r.num());
    return "(" + format_poly(r.num()) + ")/(" + format_poly(r.den()) + ")";
}

}  // namespace gq
