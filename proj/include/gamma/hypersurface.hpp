#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma/singularity.hpp"
#include "gamma/torsion.hpp"

namespace gq {

/// One isolated singular point: its top local Alexander polynomial and
/// Milnor number, optionally auto-filled from Brieskorn exponents.
struct SingularPointData {
    LaurentPoly delta_p;
    mpz_class mu_p;
    std::optional<BrieskornExponents> brieskorn;

    static SingularPointData from_brieskorn(const BrieskornExponents& e);
};

/// Input record for the identity engine.
struct HypersurfaceData {
    GlobalParams params;
    std::vector<SingularPointData> singularities;
    std::optional<LaurentPoly> delta_n;      // global top Alexander polynomial
    std::optional<RationalFn> claimed_det_phi;

    mpz_class mu() const;
    LaurentPoly local_product() const;  // prod of delta_p
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct IdentityReport {
    RationalFn h_n;
    LaurentPoly psi_n;
    mpz_class mu;
    mpz_class xi_value;
    RationalFn r_n;
    RationalFn phi;    // = det phi via r_n / (delta_n * conj(delta_n))
    RationalFn phi1;   // h_n / delta_n
    RationalFn phi2;   // psi_n / delta_n
    RationalFn det_phi;
    std::optional<LaurentPoly> delta_n;  // input or solved-for
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
};

/// psi_n(t) = (t-1)^mu * prod_p Delta_p(t).
LaurentPoly psi_top(const HypersurfaceData& data);

/// Error terms phi1 = h_n / delta_n and phi2 = psi_n / delta_n. Both
/// must be polynomial apart from the signed (t-1) exponent carried by
/// h_n; anything else raises DIVISIBILITY_VIOLATION.
std::pair<RationalFn, RationalFn> error_terms(const HypersurfaceData& data);

/// r_n = conj(h_n) * psi_n = h_n * conj(psi_n); the two routes are
/// asserted unit-equal (C_TK) and the canonical one is returned.
RationalFn r_top(const HypersurfaceData& data);

/// det(phi) = h_n * psi_n / delta_n^2, cross-checked against
/// r_n / (delta_n * conj(delta_n)).
RationalFn det_phi(const HypersurfaceData& data);

/// Run every check stated for the isolated-singularity identity;
/// failures are diagnostics in the report, never exceptions.
IdentityReport verify_corollary(const HypersurfaceData& data);

struct BoundaryProfile {
    std::vector<RationalFn> r;  // r_0 .. r_{2n}
    RationalFn tau_boundary;
};

/// r_i = delta_i (i<n), conj(delta_{2n-i}) (i>n),
/// delta_n * conj(delta_n) * det(phi) (i=n), and the alternating-product
/// boundary torsion; cross-checked against the duality route.
BoundaryProfile boundary_profile(const HypersurfaceData& data, const std::vector<LaurentPoly>& delta_list);

/// dim H_{n+1} of the Milnor fiber of the homogenized polynomial and the
/// gap dim H_n(F) - dim H^n_c: (d*mu - deg phi1, deg phi1 - deg phi2).
std::pair<mpz_class, long> dimension_bookkeeping(const HypersurfaceData& data, long deg_phi1, long deg_phi2);

}  // namespace gq
