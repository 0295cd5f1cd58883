#pragma once

#include <optional>
#include <vector>

#include "gamma/chain.hpp"

namespace gq {

/// Per-degree lifts (coordinates in C_i over Q(t)) whose classes form a
/// basis of H_i tensored with Q(t). Degrees with torsion-only homology
/// take an empty matrix (0 columns).
using HomologyBasisChoice = std::vector<RatFnMatrix>;

struct TorsionValue {
    UnitClass value;  // mode PM_TK
};

struct TorsionOptions {
    /// Column order used when choosing image bases from each boundary;
    /// one permutation per boundary degree 1..top. Empty = natural order.
    std::vector<std::vector<size_t>> pivot_orders;
};

/// Reidemeister torsion of a based complex over Q(t).
///
/// Orientation convention: the transition determinants enter with
/// exponent (-1)^{i+1}, calibrated so that the circle complex with
/// boundary [t-1] yields 1/(t-1), the value forced by the order-product
/// formula. For complexes with Q(t)-homology, h must supply lifts.
TorsionValue reidemeister_torsion(const BasedChainComplex& c, const HomologyBasisChoice& h = {},
                                  const TorsionOptions& opts = {});

/// Alternating product of homology orders: prod delta_odd / prod delta_even,
/// the basis-free torsion value up to c*t^k. Errors NOT_TORSION when some
/// homology module has positive free rank.
RationalFn torsion_from_orders(const HomologyProfile& profile);

/// Exact multiplicative correction relating the torsion computed with
/// (old_c, old_h) to the torsion computed with (new_c, new_h):
///   tau(new) = factor * tau(old), as exact values of this engine.
/// Basis vectors are columns in the original ambient coordinates of c;
/// new_c entries are square and invertible.
RationalFn basis_change_factor(const BasedChainComplex& c, const HomologyBasisChoice& old_h,
                               const HomologyBasisChoice& new_h, const std::vector<RatFnMatrix>& old_c,
                               const std::vector<RatFnMatrix>& new_c);

/// Solve the duality identity tau(boundary) = tau_X * conj(tau_X) * det^((-1)^m)
/// for det(phi): det = (tau_boundary / (tau_X * conj(tau_X)))^((-1)^m).
UnitClass solve_det_phi(const RationalFn& tau_x, const RationalFn& tau_boundary, long m);

/// Torsion invariance under adding an elementary two-term summand
/// (identity map C_{deg} -> C_{deg-1}) at the given degree.
bool stabilization_check(const BasedChainComplex& c, size_t degree = 2, const HomologyBasisChoice& h = {});

/// The complex with the elementary summand added; exposed for tests.
BasedChainComplex stabilize(const BasedChainComplex& c, size_t degree);

}  // namespace gq
