#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gamma/torsion.hpp"
#include "test_support.hpp"

using namespace gq;
using testsupport::mix_bases;
using testsupport::random_model;

namespace {
LaurentPoly T(long e = 1) { return LaurentPoly::t(e); }

BasedChainComplex circle() {
    BasedChainComplex c;
    c.lengths = {1, 1};
    PolyMatrix d(1, 1);
    d.at(0, 0) = T() - LaurentPoly(1);
    c.boundaries.push_back(d);
    return c;
}

RationalFn tau(const BasedChainComplex& c, const HomologyBasisChoice& h = {},
               const TorsionOptions& opts = {}) {
    return reidemeister_torsion(c, h, opts).value.value;
}
}

TEST_CASE("circle calibration: tau = 1/(t-1)") {
    RationalFn t = tau(circle());
    CHECK(unit_equal(t, RationalFn(LaurentPoly(1), T() - LaurentPoly(1)), UnitMode::PM_TK));
    // And the basis-free route through homology orders agrees.
    CHECK(unit_equal(t, torsion_from_orders(homology(circle())), UnitMode::PM_TK));
}

TEST_CASE("torsion equals the alternating product of homology orders") {
    std::mt19937 rng(7400);
    int done = 0;
    while (done < 200) {
        testsupport::ModelComplex m = random_model(rng, /*acyclic=*/true);
        mix_bases(m, rng, 6);
        RationalFn engine = tau(m.c);
        RationalFn orders = torsion_from_orders(homology(m.c));
        CHECK(unit_equal(engine, orders, UnitMode::PM_TK));
        ++done;
    }
}

TEST_CASE("pivot-order choices never change the torsion") {
    std::mt19937 rng(7401);
    for (int trial = 0; trial < 40; ++trial) {
        testsupport::ModelComplex m = random_model(rng, true);
        mix_bases(m, rng, 6);
        RationalFn base = tau(m.c);
        TorsionOptions opts;
        for (size_t i = 1; i <= m.c.top(); ++i) {
            std::vector<size_t> order(m.c.lengths[i]);
            for (size_t j = 0; j < order.size(); ++j) order[j] = order.size() - 1 - j;
            opts.pivot_orders.push_back(order);
        }
        CHECK(tau(m.c, {}, opts) == base);  // exactly, not just up to unit
    }
}

TEST_CASE("free homology needs lifts; lifts must be cycles") {
    BasedChainComplex c;
    c.lengths = {1};
    CHECK_THROWS_AS(reidemeister_torsion(c), Error);
    try {
        reidemeister_torsion(c);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MISSING_HOMOLOGY_BASIS);
    }

    // A lift that is not a cycle is rejected.
    BasedChainComplex two;
    two.lengths = {1, 2};
    PolyMatrix d(1, 2);
    d.at(0, 0) = T() - LaurentPoly(1);
    two.boundaries.push_back(d);
    HomologyBasisChoice h(2);
    h[1] = RatFnMatrix(2, 1);
    h[1].at(0, 0) = RationalFn(1);  // boundary of this column is t-1 != 0
    CHECK_THROWS_AS(reidemeister_torsion(two, h), Error);
    h[1].at(0, 0) = RationalFn(0);
    h[1].at(1, 0) = RationalFn(1);
    CHECK_NOTHROW(reidemeister_torsion(two, h));
}

TEST_CASE("changing homology lifts rescales torsion by the exact factor") {
    std::mt19937 rng(7402);
    for (int trial = 0; trial < 60; ++trial) {
        testsupport::ModelComplex m = random_model(rng, /*acyclic=*/false);
        mix_bases(m, rng, 5);
        RationalFn before = tau(m.c, m.h);

        // New lifts: scale by units and absorb boundaries.
        HomologyBasisChoice new_h = m.h;
        std::uniform_int_distribution<long> num(1, 3), expn(-1, 2);
        for (size_t i = 0; i < new_h.size(); ++i) {
            for (size_t k = 0; k < new_h[i].cols(); ++k) {
                RationalFn scale{LaurentPoly::monomial(Rational(num(rng)), expn(rng))};
                for (size_t r = 0; r < new_h[i].rows(); ++r) new_h[i].at(r, k) *= scale;
            }
            if (i + 1 <= m.c.top() && new_h[i].cols() > 0 && m.c.boundary(i + 1).cols() > 0) {
                RatFnMatrix bd = to_ratfn(m.c.boundary(i + 1));
                for (size_t k = 0; k < new_h[i].cols(); ++k) {
                    RationalFn coeff(num(rng));  // one multiple of the boundary column
                    for (size_t r = 0; r < new_h[i].rows(); ++r)
                        new_h[i].at(r, k) += bd.at(r, 0) * coeff;
                }
            }
        }

        std::vector<RatFnMatrix> no_c;
        RationalFn factor = basis_change_factor(m.c, m.h, new_h, no_c, no_c);
        RationalFn after = tau(m.c, new_h);
        CHECK(after == factor * before);  // exact equality, no unit slack
    }
}

TEST_CASE("changing chain bases rescales torsion by the exact factor") {
    std::mt19937 rng(7403);
    std::uniform_int_distribution<long> num(1, 3), expn(-1, 2);
    for (int trial = 0; trial < 60; ++trial) {
        testsupport::ModelComplex m = random_model(rng, false);
        mix_bases(m, rng, 5);
        RationalFn before = tau(m.c, m.h);

        // Diagonal unit rescaling of every chain group: q = c * t^k per
        // basis vector, applied to the complex as a change of basis.
        std::vector<std::vector<LaurentPoly>> q(m.c.lengths.size());
        std::vector<RatFnMatrix> old_c(m.c.lengths.size()), new_c(m.c.lengths.size());
        for (size_t i = 0; i < m.c.lengths.size(); ++i) {
            old_c[i] = RatFnMatrix::identity(m.c.lengths[i]);
            new_c[i] = RatFnMatrix(m.c.lengths[i], m.c.lengths[i]);
            for (size_t j = 0; j < m.c.lengths[i]; ++j) {
                q[i].push_back(LaurentPoly::monomial(Rational(num(rng)), expn(rng)));
                new_c[i].at(j, j) = RationalFn(q[i][j]);
            }
        }
        BasedChainComplex conj = m.c;
        for (size_t k = 1; k <= conj.top(); ++k) {
            PolyMatrix& d = conj.boundaries[k - 1];
            for (size_t r = 0; r < d.rows(); ++r)
                for (size_t c = 0; c < d.cols(); ++c) {
                    // entry' = entry * q_k[c] / q_{k-1}[r]; the quotient of
                    // units stays in the ring.
                    Unit u = unit_normalize(q[k - 1][r]).first;
                    d.at(r, c) = d.at(r, c) * q[k][c] *
                                 LaurentPoly::monomial(Rational(1) / u.coeff, -u.power);
                }
        }
        HomologyBasisChoice conj_h = m.h;
        for (size_t i = 0; i < conj_h.size(); ++i)
            for (size_t r = 0; r < conj_h[i].rows(); ++r) {
                Unit u = unit_normalize(q[i][r]).first;
                RationalFn inv{LaurentPoly::monomial(Rational(1) / u.coeff, -u.power)};
                for (size_t c = 0; c < conj_h[i].cols(); ++c) conj_h[i].at(r, c) *= inv;
            }

        RationalFn factor = basis_change_factor(m.c, m.h, m.h, old_c, new_c);
        RationalFn after = tau(conj, conj_h);
        CHECK(after == factor * before);
    }
}

TEST_CASE("reference basis-change factors on the circle") {
    // Scaling the single degree-0 basis vector by c multiplies tau by c;
    // scaling in degree 1 divides it.
    BasedChainComplex c = circle();
    RationalFn base = tau(c);

    std::vector<RatFnMatrix> old_c{RatFnMatrix::identity(1), RatFnMatrix::identity(1)};
    std::vector<RatFnMatrix> scale0 = old_c, scale1 = old_c;
    scale0[0].at(0, 0) = RationalFn(2);
    scale1[1].at(0, 0) = RationalFn(2);
    CHECK(basis_change_factor(c, {}, {}, old_c, scale0) == RationalFn(2));
    CHECK(basis_change_factor(c, {}, {}, old_c, scale1) == RationalFn(Rational(1, 2)));

    // Scaling a homology lift by t on a complex with free homology
    // divides tau by t in degree 0.
    BasedChainComplex pt;
    pt.lengths = {1};
    HomologyBasisChoice h0{RatFnMatrix::identity(1)}, ht{RatFnMatrix::identity(1)};
    ht[0].at(0, 0) = RationalFn(T());
    RationalFn f = basis_change_factor(pt, h0, ht, {}, {});
    CHECK(f == RationalFn(LaurentPoly(1), T()));
    CHECK(tau(pt, ht) == f * tau(pt, h0));
    CHECK(base == tau(c));  // untouched
}

TEST_CASE("duality solver recovers the intersection determinant") {
    // tau_boundary = tau_X * conj(tau_X) * det^((-1)^m).
    RationalFn tau_x(T() - LaurentPoly(1));
    RationalFn det{(T() - LaurentPoly(1)) * (T() + LaurentPoly(1))};
    for (long m : {2L, 3L}) {
        RationalFn boundary = tau_x * tau_x.bar() * ((m % 2 == 0) ? det : det.inverse());
        UnitClass solved = solve_det_phi(tau_x, boundary, m);
        CHECK(unit_equal(solved.value, det, UnitMode::PM_TK));
    }
    CHECK_THROWS_AS(solve_det_phi(RationalFn(0), tau_x, 2), Error);
}

TEST_CASE("stabilization leaves torsion unchanged") {
    CHECK(stabilization_check(circle(), 1));
    std::mt19937 rng(7404);
    for (int trial = 0; trial < 30; ++trial) {
        testsupport::ModelComplex m = random_model(rng, true);
        mix_bases(m, rng, 4);
        std::uniform_int_distribution<size_t> degd(1, m.c.top() + 1);
        CHECK(stabilization_check(m.c, degd(rng), m.h));
    }
    BasedChainComplex s = stabilize(circle(), 2);
    CHECK(s.lengths.size() == 3);
    CHECK(s.lengths[1] == 2);
    CHECK(s.lengths[2] == 1);
    CHECK_NOTHROW(validate(s));
}
