#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gamma/chain.hpp"
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
}

TEST_CASE("validation rejects bad shapes and non-complexes") {
    BasedChainComplex c = circle();
    CHECK_NOTHROW(validate(c));

    BasedChainComplex wrong = c;
    wrong.lengths = {2, 1};
    CHECK_THROWS_AS(validate(wrong), Error);

    BasedChainComplex notc;
    notc.lengths = {1, 1, 1};
    PolyMatrix d(1, 1);
    d.at(0, 0) = T();
    notc.boundaries = {d, d};  // t * t != 0
    try {
        validate(notc);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NOT_A_COMPLEX);
    }
}

TEST_CASE("circle cover: H_0 = Gamma/(t-1), H_1 = 0") {
    HomologyProfile p = homology(circle());
    REQUIRE(p.degrees() == 2);
    CHECK(p.modules[0].free_rank == 0);
    REQUIRE(p.modules[0].torsion_factors.size() == 1);
    CHECK(p.modules[0].torsion_factors[0] == T() - LaurentPoly(1));
    CHECK(p.delta[0] == T() - LaurentPoly(1));
    CHECK(p.modules[1].free_rank == 0);
    CHECK(p.modules[1].torsion_factors.empty());
    CHECK(p.delta[1] == LaurentPoly(1));
    CHECK(is_rationally_acyclic(circle()));
}

TEST_CASE("random complexes reproduce the homology planted by construction") {
    std::mt19937 rng(7300);
    for (int trial = 0; trial < 120; ++trial) {
        testsupport::ModelComplex m = random_model(rng, /*acyclic=*/false);
        mix_bases(m, rng, 6);
        HomologyProfile p = homology(m.c);
        REQUIRE(p.degrees() == m.c.lengths.size());
        for (size_t i = 0; i < p.degrees(); ++i) {
            CHECK(p.modules[i].free_rank == m.free_ranks[i]);
            LaurentPoly expected(1);
            for (const auto& f : m.factors[i])
                if (!f.is_unit()) expected *= unit_normalize(f).second;
            CHECK(p.delta[i] == unit_normalize(expected).second);
        }
        // Euler characteristic: alternating sums of lengths and of
        // homology ranks agree.
        long chain_sum = 0, hom_sum = 0;
        for (size_t i = 0; i < p.degrees(); ++i) {
            long sign = (i % 2 == 0) ? 1 : -1;
            chain_sum += sign * static_cast<long>(m.c.lengths[i]);
            hom_sum += sign * static_cast<long>(p.modules[i].free_rank);
        }
        CHECK(chain_sum == hom_sum);
    }
}

TEST_CASE("invariant factors of homology form a divisibility chain") {
    std::mt19937 rng(7301);
    for (int trial = 0; trial < 60; ++trial) {
        testsupport::ModelComplex m = random_model(rng, true);
        mix_bases(m, rng, 8);
        HomologyProfile p = homology(m.c);
        for (const auto& mod : p.modules)
            for (size_t i = 0; i + 1 < mod.torsion_factors.size(); ++i)
                CHECK(divides(mod.torsion_factors[i], mod.torsion_factors[i + 1]));
    }
}

TEST_CASE("jordan counts respect multiplicity and Galois symmetry") {
    // H = Gamma/((t-1)^2 (t^2+1)): one block at order 1 (size 2), one at order 4.
    ModuleDecomposition m;
    m.torsion_factors.push_back((T() - LaurentPoly(1)).pow(2) * (T(2) + LaurentPoly(1)));
    CHECK(jordan_count(m, 1) == 1);
    CHECK(jordan_count(m, 4) == 1);
    CHECK(jordan_count(m, 2) == 0);
    CHECK(jordan_count(m, 3) == 0);

    ModuleDecomposition two;
    two.torsion_factors.push_back(T() - LaurentPoly(1));
    two.torsion_factors.push_back((T() - LaurentPoly(1)) * (T() + LaurentPoly(1)));
    CHECK(jordan_count(two, 1) == 2);
    CHECK(jordan_count(two, 2) == 1);

    ModuleDecomposition bad;
    bad.torsion_factors.push_back(T(2) + LaurentPoly(2));
    CHECK_THROWS_AS(jordan_count(bad, 1), Error);
}

TEST_CASE("local system dimension via the Wang sequence") {
    // Synthetic profile: H_1 = Gamma/((t-1)^2 (t^2+1)), H_0 = Gamma/(t-1).
    HomologyProfile p;
    ModuleDecomposition h0, h1;
    h0.torsion_factors.push_back(T() - LaurentPoly(1));
    h1.torsion_factors.push_back((T() - LaurentPoly(1)).pow(2) * (T(2) + LaurentPoly(1)));
    p.modules = {h0, h1};
    p.delta = {h0.order(), h1.order()};
    CHECK(local_system_dim(p, 4, 1) == 1);   // N(i, 1) + N(i, 0) = 1 + 0
    CHECK(local_system_dim(p, 1, 1) == 2);   // 1 + 1
    CHECK(local_system_dim(p, 1, 0) == 1);   // degree -1 contributes nothing
    CHECK(local_system_dim(p, 4, 0) == 0);

    HomologyProfile free_h;
    ModuleDecomposition f;
    f.free_rank = 1;
    free_h.modules = {f};
    free_h.delta = {LaurentPoly(1)};
    CHECK_THROWS_AS(local_system_dim(free_h, 1, 0), Error);
}

TEST_CASE("covering dimension sums over divisors weighted by phi") {
    // H_1 = Gamma/(t^5-1): the 5-fold quotient data has full rank 5 in
    // degree 1 of the 5-sheeted cover (trivial H_0 here).
    HomologyProfile p;
    ModuleDecomposition h0, h1;
    h1.torsion_factors.push_back(T(5) - LaurentPoly(1));
    p.modules = {h0, h1};
    p.delta = {LaurentPoly(1), h1.order()};
    CHECK(covering_dim(p, 5, 1) == 5);
    CHECK(covering_dim(p, 1, 1) == 1);
}
