#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gamma/singularity.hpp"

using namespace gq;

namespace {
LaurentPoly T(long e = 1) { return LaurentPoly::t(e); }
}

TEST_CASE("Milnor numbers of Brieskorn germs") {
    CHECK(brieskorn_milnor_number({{3, 4}}) == 6);
    CHECK(brieskorn_milnor_number({{2, 2, 3}}) == 2);
    CHECK(brieskorn_milnor_number({{2}}) == 1);
    CHECK(brieskorn_milnor_number({{5, 5, 5, 5}}) == 256);
    CHECK_THROWS_AS(brieskorn_milnor_number({{1, 3}}), Error);
    CHECK_THROWS_AS(brieskorn_milnor_number({{}}), Error);
}

TEST_CASE("monodromy characteristic polynomial of the (3,4) cusp germ") {
    LaurentPoly p = brieskorn_charpoly({{3, 4}});
    CHECK(p == cyclotomic(12) * cyclotomic(6));
    CHECK(p.total_degree() == 6);
    // Expanded by hand: (t^4 - t^2 + 1)(t^2 - t + 1) = t^6 - t^5 + t^3 - t + 1.
    LaurentPoly one(1);
    LaurentPoly expanded = T(6) - T(5) + T(3) - T() + one;
    CHECK(p == expanded);
    CHECK((T(4) - T(2) + one) * (T(2) - T() + one) == expanded);
}

TEST_CASE("more monodromy polynomials against independent eigenvalue counts") {
    // (2,2): eigenvalue (-1)(-1) = 1, so t - 1.
    CHECK(brieskorn_charpoly({{2, 2}}) == T() - LaurentPoly(1));
    // (2,3): eigenvalues -zeta_3, -zeta_3^2 = primitive 6th roots.
    CHECK(brieskorn_charpoly({{2, 3}}) == cyclotomic(6));
    // (2,2,3): eigenvalues zeta_3, zeta_3^2.
    CHECK(brieskorn_charpoly({{2, 2, 3}}) == cyclotomic(3));
    // (3,3): 1 twice, plus the primitive cube roots.
    CHECK(brieskorn_charpoly({{3, 3}}) == (T() - LaurentPoly(1)).pow(2) * cyclotomic(3));
    // Degree always equals the Milnor number.
    std::mt19937 rng(7500);
    std::uniform_int_distribution<long> a(2, 6);
    std::uniform_int_distribution<size_t> k(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        BrieskornExponents e;
        size_t kk = k(rng);
        for (size_t i = 0; i < kk; ++i) e.exponents.push_back(a(rng));
        LaurentPoly cp = brieskorn_charpoly(e);
        CHECK(cp.total_degree() == brieskorn_milnor_number(e).get_si());
        CHECK(cp.low_exp() == 0);
    }
}

TEST_CASE("xi and the Euler characteristic are integral across the grid") {
    for (long n = 1; n <= 6; ++n)
        for (long d = 2; d <= 9; ++d) {
            GlobalParams g{n, d};
            CHECK_NOTHROW(xi(g));
            CHECK_NOTHROW(chi_milnor_fiber(g));
        }
    CHECK(xi({1, 4}) == 2);
    CHECK(xi({2, 3}) == 3);
    CHECK(xi({2, 2}) == 1);
    CHECK(chi_milnor_fiber({1, 3}) == -3);
    CHECK(chi_milnor_fiber({2, 2}) == 2);
    CHECK(chi_milnor_fiber({2, 3}) == 9);
}

TEST_CASE("top fiber polynomial: sign of the (t-1) exponent flips with n") {
    // n = 1, d = 4: (t-1)(t^4-1)^2, a genuine polynomial of degree 9.
    RationalFn h14 = top_h_polynomial({1, 4});
    CHECK(h14.is_polynomial());
    CHECK(h14.num() == (T() - LaurentPoly(1)) * (T(4) - LaurentPoly(1)).pow(2));
    // n = 2, d = 3: (t^3-1)^3 / (t-1); the division is exact because
    // t-1 divides t^3-1, leaving (t^3-1)^2 (t^2+t+1).
    RationalFn h23 = top_h_polynomial({2, 3});
    CHECK(h23.is_polynomial());
    CHECK(h23.num() == (T(3) - LaurentPoly(1)).pow(2) * (T(2) + T() + LaurentPoly(1)));
    CHECK(h23 * RationalFn(T() - LaurentPoly(1)) == RationalFn((T(3) - LaurentPoly(1)).pow(3)));
    // n = 2, d = 2 with xi = 1: (t^2-1)/(t-1) = t+1.
    CHECK(top_h_polynomial({2, 2}) == RationalFn(T() + LaurentPoly(1)));
}

TEST_CASE("global Milnor budget") {
    CHECK(global_mu({1, 4}, {mpz_class(6)}) == 3);
    CHECK(global_mu({2, 3}, {mpz_class(2), mpz_class(2), mpz_class(2)}) == 2);
    CHECK(global_mu({1, 3}, {mpz_class(4)}) == 0);
    CHECK_THROWS_AS(global_mu({1, 2}, {mpz_class(5)}), Error);
    try {
        global_mu({1, 2}, {mpz_class(5)});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NEGATIVE_MU);
    }
}

TEST_CASE("alternating product of fiber polynomials in the homogeneous case") {
    // Exponent is -chi(F_h)/d: (1,3) -> (t^3-1)^1; (2,2) -> (t^2-1)^-1.
    CHECK(alternating_h_product({1, 3}) == RationalFn(T(3) - LaurentPoly(1)));
    CHECK(alternating_h_product({2, 2}) ==
          RationalFn(LaurentPoly(1), T(2) - LaurentPoly(1)));
    CHECK(alternating_h_product({2, 3}) ==
          RationalFn(LaurentPoly(1), (T(3) - LaurentPoly(1)).pow(3)));
}
