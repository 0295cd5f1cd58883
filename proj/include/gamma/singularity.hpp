#pragma once

#include <vector>

#include "gamma/cyclotomic.hpp"
#include "gamma/ratfn.hpp"

namespace gq {

/// Exponents (a_1,...,a_k), all >= 2, of a Brieskorn germ
/// x_1^{a_1} + ... + x_k^{a_k}.
struct BrieskornExponents {
    std::vector<long> exponents;

    void check() const;
};

/// Ambient data for a degree-d hypersurface in C^{n+1}.
struct GlobalParams {
    long n = 1;
    long d = 1;

    void check() const;
};

/// Milnor number prod (a_i - 1).
mpz_class brieskorn_milnor_number(const BrieskornExponents& e);

/// Characteristic polynomial of the Milnor monodromy: the product over
/// eigenvalues zeta_{a_1}^{j_1} * ... * zeta_{a_k}^{j_k} (1 <= j_i < a_i)
/// of (t - eigenvalue), assembled exactly over Q by grouping eigenvalues
/// into cyclotomic factors. Degree equals the Milnor number.
LaurentPoly brieskorn_charpoly(const BrieskornExponents& e);

/// xi = ((d-1)^{n+1} + (-1)^n) / d; always an integer (checked).
mpz_class xi(const GlobalParams& g);

/// Top Milnor-fiber Alexander polynomial of the degree-d part:
/// h_n(t) = (t-1)^{(-1)^{n+1}} (t^d-1)^xi. The (t-1) exponent is
/// genuinely negative for even n, hence the rational-function result.
RationalFn top_h_polynomial(const GlobalParams& g);

/// mu = (d-1)^{n+1} - sum of local Milnor numbers; errors NEGATIVE_MU
/// when the singularities exceed the global budget.
mpz_class global_mu(const GlobalParams& g, const std::vector<mpz_class>& mu_list);

/// Euler characteristic of the smooth homogeneous Milnor fiber:
/// chi(F_h) = 1 + (-1)^n (d-1)^{n+1}; always divisible by d.
mpz_class chi_milnor_fiber(const GlobalParams& g);

/// prod_i h_i(t)^{(-1)^{i+1}} = (t^d-1)^{-chi(F_h)/d} in the
/// homogeneous (mu = 0) case.
RationalFn alternating_h_product(const GlobalParams& g);

}  // namespace gq
