#include "gamma/laurent.hpp"

#include <sstream>

namespace gq {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::INEXACT_DIVISION: return "INEXACT_DIVISION";
        case Errc::DIVISION_BY_ZERO: return "DIVISION_BY_ZERO";
        case Errc::ZERO_POLYNOMIAL: return "ZERO_POLYNOMIAL";
        case Errc::BOTH_ZERO: return "BOTH_ZERO";
        case Errc::NOT_CYCLOTOMIC: return "NOT_CYCLOTOMIC";
        case Errc::PARSE_ERROR: return "PARSE_ERROR";
        case Errc::NOT_SQUARE: return "NOT_SQUARE";
        case Errc::NOT_A_COMPLEX: return "NOT_A_COMPLEX";
        case Errc::SHAPE_MISMATCH: return "SHAPE_MISMATCH";
        case Errc::MISSING_HOMOLOGY_BASIS: return "MISSING_HOMOLOGY_BASIS";
        case Errc::DEGENERATE_BASIS: return "DEGENERATE_BASIS";
        case Errc::NOT_TORSION: return "NOT_TORSION";
        case Errc::ZERO_INPUT: return "ZERO_INPUT";
        case Errc::NON_INTEGER: return "NON_INTEGER";
        case Errc::NEGATIVE_MU: return "NEGATIVE_MU";
        case Errc::DIVISIBILITY_VIOLATION: return "DIVISIBILITY_VIOLATION";
        case Errc::BOUND_VIOLATION: return "BOUND_VIOLATION";
        case Errc::IO_ERROR: return "IO_ERROR";
        case Errc::INVALID_INPUT: return "INVALID_INPUT";
    }
    return "UNKNOWN";
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

LaurentPoly::LaurentPoly(const Rational& constant) {
    if (constant != 0) {
        low_ = 0;
        coeffs_.push_back(constant);
    }
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) {
        p.low_ = exp;
        p.coeffs_.push_back(coeff);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<long, Rational>& terms) {
    LaurentPoly p;
    for (const auto& [exp, c] : terms) p += monomial(c, exp);
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

long LaurentPoly::low_exp() const {
    if (is_zero()) fail(Errc::ZERO_POLYNOMIAL, "low_exp of zero");
    return low_;
}

long LaurentPoly::high_exp() const {
    if (is_zero()) fail(Errc::ZERO_POLYNOMIAL, "high_exp of zero");
    return low_ + static_cast<long>(coeffs_.size()) - 1;
}

long LaurentPoly::total_degree() const {
    if (is_zero()) fail(Errc::ZERO_POLYNOMIAL, "total degree of zero");
    return static_cast<long>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(long exp) const {
    long idx = exp - low_;
    if (is_zero() || idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(idx)];
}

const Rational& LaurentPoly::leading_coeff() const {
    if (is_zero()) fail(Errc::ZERO_POLYNOMIAL, "leading coefficient of zero");
    return coeffs_.back();
}

std::vector<std::pair<long, Rational>> LaurentPoly::terms() const {
    std::vector<std::pair<long, Rational>> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<long>(i), coeffs_[i]);
    return out;
}

void LaurentPoly::trim() {
    size_t head = 0;
    while (head < coeffs_.size() && coeffs_[head] == 0) ++head;
    size_t tail = coeffs_.size();
    while (tail > head && coeffs_[tail - 1] == 0) --tail;
    if (head == tail) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    if (head > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(head));
    coeffs_.resize(tail - head);
    low_ += static_cast<long>(head);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long new_low = std::min(low_, o.low_);
    long new_high = std::max(high_exp(), o.high_exp());
    std::vector<Rational> out(static_cast<size_t>(new_high - new_low + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<size_t>(low_ - new_low) + i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<size_t>(o.low_ - new_low) + i] += o.coeffs_[i];
    low_ = new_low;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    if (is_zero() || o.is_zero()) return *this = LaurentPoly();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    low_ += o.low_;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [exp, c] : terms()) r += monomial(c, -exp);
    return r;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) fail(Errc::DIVISION_BY_ZERO, "divmod by zero");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    // Shift both operands down to lowest exponent 0, divide in Q[t], shift back.
    long alow = a.low_exp();
    long blow = b.low_exp();
    LaurentPoly rem = a.shifted(-alow);
    LaurentPoly div = b.shifted(-blow);
    LaurentPoly quot;
    long bdeg = div.total_degree();
    const Rational& blead = div.leading_coeff();
    while (!rem.is_zero() && rem.high_exp() >= bdeg) {
        Rational c = rem.leading_coeff() / blead;
        long shift = rem.high_exp() - bdeg;
        LaurentPoly term = LaurentPoly::monomial(c, shift);
        quot += term;
        rem -= term * div;
    }
    return {quot.shifted(alow - blow), rem.shifted(alow)};
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(Errc::INEXACT_DIVISION, format_poly(b) + " does not divide " + format_poly(a));
    return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return divmod(a, b).second.is_zero();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) fail(Errc::BOTH_ZERO, "gcd(0, 0)");
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        LaurentPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return unit_normalize(x).second;
}

std::pair<Unit, LaurentPoly> unit_normalize(const LaurentPoly& p) {
    if (p.is_zero()) fail(Errc::ZERO_POLYNOMIAL, "unit_normalize of zero");
    Unit u{p.leading_coeff(), p.low_exp()};
    LaurentPoly n = p.shifted(-u.power);
    LaurentPoly scaled;
    for (const auto& [exp, c] : n.terms()) scaled += LaurentPoly::monomial(c / u.coeff, exp);
    return {u, scaled};
}

LaurentPoly involution(const LaurentPoly& p) { return p.bar(); }

long total_degree(const LaurentPoly& p) { return p.total_degree(); }

namespace {

std::string term_body(const Rational& abs_coeff, long exp) {
    std::string t;
    if (exp == 0) return rational_to_string(abs_coeff);
    if (exp == 1)
        t = "t";
    else
        t = "t^" + std::to_string(exp);
    if (abs_coeff == 1) return t;
    return rational_to_string(abs_coeff) + "*" + t;
}

}  // namespace

std::string format_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    auto terms = p.terms();
    std::string out;
    // Highest-degree-first with explicit signs.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [exp, c] = *it;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += term_body(mag, exp);
    }
    return out;
}

}  // namespace gq
