#pragma once

#include <map>

#include "gamma/laurent.hpp"

namespace gq {

/// Exact factorization p = unit * prod_m Phi_m^mult.
struct CyclotomicFactorization {
    std::map<long, long> factors;  // m -> multiplicity, m >= 1
    Unit unit{Rational(1), 0};

    LaurentPoly reconstruct() const;
};

/// The m-th cyclotomic polynomial Phi_m, monic of degree phi(m).
const LaurentPoly& cyclotomic(long m);

long euler_phi(long n);

/// Factor p into cyclotomics times a unit. A non-cyclotomic residual
/// raises NOT_CYCLOTOMIC (with the residual in the message); use
/// try_factor_cyclotomic to probe without an exception.
CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p);

/// Returns false (leaving `out` partially meaningless) when a
/// non-cyclotomic residual remains; `residual` receives it.
bool try_factor_cyclotomic(const LaurentPoly& p, CyclotomicFactorization& out, LaurentPoly& residual);

}  // namespace gq
