#pragma once

#include <vector>

#include "gamma/cyclotomic.hpp"
#include "gamma/matrix.hpp"

namespace gq {

/// Finite chain complex of free Q[t,t^-1]-modules with chosen bases.
/// boundary(i) maps C_i to C_{i-1} for i = 1..top and has shape
/// lengths[i-1] x lengths[i]; C_{-1} = 0 is implicit.
struct BasedChainComplex {
    std::vector<size_t> lengths;
    std::vector<PolyMatrix> boundaries;  // boundaries[i-1] is boundary(i)

    size_t top() const { return lengths.empty() ? 0 : lengths.size() - 1; }
    const PolyMatrix& boundary(size_t i) const { return boundaries.at(i - 1); }
};

/// Confirms shape consistency and that consecutive boundaries compose to zero.
void validate(const BasedChainComplex& c);

/// Free rank plus ordered invariant-factor list of a finitely generated
/// Q[t,t^-1]-module. Factors are unit-normalized non-units, each
/// dividing the next.
struct ModuleDecomposition {
    size_t free_rank = 0;
    std::vector<LaurentPoly> torsion_factors;

    /// The order: product of the torsion factors (1 when none).
    LaurentPoly order() const;
};

struct HomologyProfile {
    std::vector<ModuleDecomposition> modules;  // per degree 0..top
    std::vector<LaurentPoly> delta;            // Alexander polynomial per degree

    size_t degrees() const { return modules.size(); }
};

HomologyProfile homology(const BasedChainComplex& c);

/// True iff every homology module is pure torsion, i.e. the complex
/// tensored with Q(t) is acyclic.
bool is_rationally_acyclic(const BasedChainComplex& c);

/// Number of Jordan blocks with eigenvalue any primitive m-th root of
/// unity: the count of invariant factors divisible by Phi_m. Galois
/// symmetry over Q makes the count independent of the chosen primitive
/// root. Errors NOT_CYCLOTOMIC when a factor has a non-cyclotomic part.
size_t jordan_count(const ModuleDecomposition& m, long order);

/// dim H_i with coefficients in the rank-one local system of a primitive
/// m-th root of unity: N(lambda, i) + N(lambda, i-1) by the Wang sequence.
size_t local_system_dim(const HomologyProfile& profile, long order, size_t degree);

/// dim H_i of the (d+1)-fold cover: sum over m | dplus1 of
/// phi(m) * local_system_dim(m, i), every (d+1)-st root contributing.
size_t covering_dim(const HomologyProfile& profile, long dplus1, size_t degree);

}  // namespace gq
