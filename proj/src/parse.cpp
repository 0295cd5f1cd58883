#include "gamma/parse.hpp"

#include <cctype>

namespace gq {

namespace {

class Parser {
public:
    Parser(std::string_view text, bool ratfn_mode) : text_(text), ratfn_(ratfn_mode) {}

    RationalFn run() {
        RationalFn v = expr();
        skip_ws();
        if (pos_ != text_.size()) error("end of input");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& expected) {
        fail(Errc::PARSE_ERROR, "at offset " + std::to_string(pos_) + ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool starts_base() {
        char c = peek();
        return c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    mpz_class integer_digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) error("integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    long signed_int() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        mpz_class v = integer_digits();
        if (!v.fits_slong_p()) error("exponent in range");
        long n = v.get_si();
        return neg ? -n : n;
    }

    RationalFn expr() {
        bool neg = accept('-');
        RationalFn v = term();
        if (neg) v = -v;
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    RationalFn term() {
        RationalFn v = factor();
        for (;;) {
            if (accept('*')) {
                v *= factor();
            } else if (ratfn_ && peek() == '/') {
                ++pos_;
                RationalFn d = factor();
                if (d.is_zero()) error("nonzero divisor");
                v /= d;
            } else if (starts_base()) {
                v *= factor();
            } else {
                return v;
            }
        }
    }

    RationalFn factor() {
        RationalFn b = base();
        if (accept('^')) {
            long e = signed_int();
            if (b.is_zero() && e <= 0) error("positive exponent for zero base");
            if (!ratfn_ && e < 0 && !(b.is_polynomial() && b.num().is_unit())) error("nonnegative exponent");
            return b.pow(e);
        }
        return b;
    }

    RationalFn base() {
        char c = peek();
        if (c == 't') {
            ++pos_;
            return RationalFn(LaurentPoly::t());
        }
        if (c == '(') {
            ++pos_;
            RationalFn v = expr();
            if (!accept(')')) error("')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class numerator = integer_digits();
            // A '/' binds as a rational coefficient when followed by digits.
            // In the polynomial grammar that is the only legal use of '/'.
            if (peek() == '/' && (!ratfn_ || is_digit_after_slash())) {
                ++pos_;
                mpz_class denominator = integer_digits();
                if (denominator == 0) error("positive denominator");
                Rational q(numerator, denominator);
                q.canonicalize();
                return RationalFn(LaurentPoly(q));
            }
            return RationalFn(LaurentPoly(Rational(numerator)));
        }
        error("'t', number or '('");
    }

    bool is_digit_after_slash() {
        size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
    }

    std::string_view text_;
    size_t pos_ = 0;
    bool ratfn_;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) {
    RationalFn v = Parser(text, false).run();
    // Poly mode never divides, so the value is already polynomial.
    return v.num();
}

RationalFn parse_ratfn(std::string_view text) { return Parser(text, true).run(); }

}  // namespace gq
