#include "gamma/singularity.hpp"

#include <map>
#include <numeric>

namespace gq {

void BrieskornExponents::check() const {
    if (exponents.empty()) fail(Errc::INVALID_INPUT, "empty Brieskorn exponent list");
    for (long a : exponents)
        if (a < 2) fail(Errc::INVALID_INPUT, "Brieskorn exponents must be >= 2");
}

void GlobalParams::check() const {
    if (n < 1 || d < 1) fail(Errc::INVALID_INPUT, "require n >= 1 and d >= 1");
}

mpz_class brieskorn_milnor_number(const BrieskornExponents& e) {
    e.check();
    mpz_class mu = 1;
    for (long a : e.exponents) mu *= a - 1;
    return mu;
}

LaurentPoly brieskorn_charpoly(const BrieskornExponents& e) {
    e.check();
    // Every eigenvalue is zeta_L^s for L = lcm(a_i). Walk all index tuples,
    // accumulating the multiplicity of each exponent s mod L; then group
    // exact root orders into cyclotomic factors.
    long lcm = 1;
    for (long a : e.exponents) lcm = std::lcm(lcm, a);
    std::map<long, long> exp_count;  // s mod L -> multiplicity
    std::vector<long> j(e.exponents.size(), 1);
    for (;;) {
        long s = 0;
        for (size_t i = 0; i < j.size(); ++i) s = (s + j[i] * (lcm / e.exponents[i])) % lcm;
        ++exp_count[s];
        size_t i = 0;
        while (i < j.size() && j[i] == e.exponents[i] - 1) j[i++] = 1;
        if (i == j.size()) break;
        ++j[i];
    }
    std::map<long, long> order_count;  // root order -> eigenvalue count
    for (const auto& [s, c] : exp_count) order_count[lcm / std::gcd(lcm, s == 0 ? lcm : s)] += c;
    LaurentPoly charpoly(1);
    for (const auto& [m, count] : order_count) {
        long phi = euler_phi(m);
        if (count % phi != 0)
            fail(Errc::INVALID_INPUT, "eigenvalue multiset not Galois-stable (internal error)");
        charpoly *= cyclotomic(m).pow(static_cast<unsigned long>(count / phi));
    }
    return charpoly;
}

namespace {

mpz_class pow_mpz(long base, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::abs(base)), static_cast<unsigned long>(exp));
    if (base < 0 && exp % 2 != 0) r = -r;
    return r;
}

}  // namespace

mpz_class xi(const GlobalParams& g) {
    g.check();
    mpz_class num = pow_mpz(g.d - 1, g.n + 1) + (g.n % 2 == 0 ? 1 : -1);
    if (num % g.d != 0) fail(Errc::NON_INTEGER, "xi is not an integer");
    return num / g.d;
}

RationalFn top_h_polynomial(const GlobalParams& g) {
    g.check();
    RationalFn t1{LaurentPoly::t() - LaurentPoly(1)};
    RationalFn td1{LaurentPoly::t(g.d) - LaurentPoly(1)};
    long sign_exp = (g.n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
    mpz_class x = xi(g);
    if (!x.fits_slong_p()) fail(Errc::INVALID_INPUT, "xi too large");
    return t1.pow(sign_exp) * td1.pow(x.get_si());
}

mpz_class global_mu(const GlobalParams& g, const std::vector<mpz_class>& mu_list) {
    g.check();
    mpz_class mu = pow_mpz(g.d - 1, g.n + 1);
    for (const auto& m : mu_list) mu -= m;
    if (mu < 0) fail(Errc::NEGATIVE_MU, "local Milnor numbers exceed (d-1)^{n+1}");
    return mu;
}

mpz_class chi_milnor_fiber(const GlobalParams& g) {
    g.check();
    mpz_class chi = 1 + (g.n % 2 == 0 ? 1 : -1) * pow_mpz(g.d - 1, g.n + 1);
    if (chi % g.d != 0) fail(Errc::NON_INTEGER, "chi(F_h) not divisible by d");
    return chi;
}

RationalFn alternating_h_product(const GlobalParams& g) {
    mpz_class e = -chi_milnor_fiber(g) / g.d;
    if (!e.fits_slong_p()) fail(Errc::INVALID_INPUT, "exponent too large");
    RationalFn td1{LaurentPoly::t(g.d) - LaurentPoly(1)};
    return td1.pow(e.get_si());
}

}  // namespace gq
