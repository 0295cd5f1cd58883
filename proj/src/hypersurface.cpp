#include "gamma/hypersurface.hpp"

#include <sstream>

namespace gq {

SingularPointData SingularPointData::from_brieskorn(const BrieskornExponents& e) {
    SingularPointData p;
    p.brieskorn = e;
    p.delta_p = brieskorn_charpoly(e);
    p.mu_p = brieskorn_milnor_number(e);
    return p;
}

mpz_class HypersurfaceData::mu() const {
    std::vector<mpz_class> mus;
    for (const auto& s : singularities) mus.push_back(s.mu_p);
    return global_mu(params, mus);
}

LaurentPoly HypersurfaceData::local_product() const {
    LaurentPoly p(1);
    for (const auto& s : singularities) p *= s.delta_p;
    return p;
}

bool IdentityReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult* IdentityReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

LaurentPoly psi_top(const HypersurfaceData& data) {
    mpz_class mu = data.mu();  // raises NEGATIVE_MU on inconsistent input
    if (!mu.fits_ulong_p()) fail(Errc::INVALID_INPUT, "mu too large");
    LaurentPoly t1 = LaurentPoly::t() - LaurentPoly(1);
    return t1.pow(mu.get_ui()) * data.local_product();
}

namespace {

const LaurentPoly& t_minus_1() {
    static const LaurentPoly p = LaurentPoly::t() - LaurentPoly(1);
    return p;
}

void require_delta(const HypersurfaceData& data) {
    if (!data.delta_n || data.delta_n->is_zero())
        fail(Errc::INVALID_INPUT, "delta_n required and nonzero");
}

}  // namespace

std::pair<RationalFn, RationalFn> error_terms(const HypersurfaceData& data) {
    require_delta(data);
    RationalFn delta{*data.delta_n};
    RationalFn phi1 = top_h_polynomial(data.params) / delta;
    RationalFn phi2 = RationalFn(psi_top(data)) / delta;
    // phi2 is a genuine polynomial quotient; phi1 may carry the signed
    // (t-1)^{-1} of the top h-polynomial for even n, nothing else.
    if (!phi2.is_polynomial())
        fail(Errc::DIVISIBILITY_VIOLATION, "delta_n does not divide psi_n; residual denominator " +
                                               format_poly(phi2.den()));
    if (!phi1.is_polynomial() && !divides(t_minus_1(), phi1.den()) )
        fail(Errc::DIVISIBILITY_VIOLATION, "delta_n does not divide h_n; residual denominator " +
                                               format_poly(phi1.den()));
    if (!phi1.is_polynomial() && phi1.den().total_degree() > 1)
        fail(Errc::DIVISIBILITY_VIOLATION, "delta_n does not divide h_n; residual denominator " +
                                               format_poly(phi1.den()));
    return {phi1, phi2};
}

RationalFn r_top(const HypersurfaceData& data) {
    RationalFn h = top_h_polynomial(data.params);
    RationalFn psi{psi_top(data)};
    RationalFn route1 = h.bar() * psi;
    RationalFn route2 = h * psi.bar();
    if (!unit_equal(route1, route2, UnitMode::C_TK))
        fail(Errc::INVALID_INPUT, "r_n routes disagree (non-cyclotomic input?)");
    return unit_class_representative(route1);
}

RationalFn det_phi(const HypersurfaceData& data) {
    require_delta(data);
    RationalFn delta{*data.delta_n};
    RationalFn via_orders = top_h_polynomial(data.params) * RationalFn(psi_top(data)) / (delta * delta);
    if (!via_orders.is_polynomial())
        fail(Errc::DIVISIBILITY_VIOLATION, "delta_n^2 does not divide h_n * psi_n; residual denominator " +
                                               format_poly(via_orders.den()));
    RationalFn via_duality = r_top(data) / (delta * delta.bar());
    if (!unit_equal(via_orders, via_duality, UnitMode::PM_TK))
        fail(Errc::INVALID_INPUT, "det(phi) routes disagree");
    return unit_class_representative(via_orders);
}

namespace {

// Square root of a polynomial that is a unit times a product of
// cyclotomics with even multiplicities; used when solving for delta_n.
std::optional<LaurentPoly> cyclotomic_sqrt(const RationalFn& p) {
    if (!p.is_polynomial() || p.is_zero()) return std::nullopt;
    CyclotomicFactorization f;
    LaurentPoly residual;
    if (!try_factor_cyclotomic(p.num(), f, residual)) return std::nullopt;
    LaurentPoly root(1);
    for (const auto& [m, mult] : f.factors) {
        if (mult % 2 != 0) return std::nullopt;
        root *= cyclotomic(m).pow(static_cast<unsigned long>(mult / 2));
    }
    return root;
}

std::string residual_diagnostic(const RationalFn& lhs, const RationalFn& rhs) {
    RationalFn ratio = lhs / rhs;
    RationalFn rep = unit_class_representative(ratio);
    std::ostringstream os;
    os << "residual " << format_ratfn(rep);
    CyclotomicFactorization f;
    LaurentPoly leftover;
    if (rep.is_polynomial() && try_factor_cyclotomic(rep.num(), f, leftover) && !f.factors.empty()) {
        os << " =";
        for (const auto& [m, mult] : f.factors) {
            os << " Phi_" << m;
            if (mult > 1) os << "^" << mult;
        }
    }
    return os.str();
}

}  // namespace

IdentityReport verify_corollary(const HypersurfaceData& data) {
    IdentityReport rep;
    auto check = [&rep](const std::string& name, bool ok, const std::string& detail = "") {
        rep.checks.push_back({name, ok, detail});
    };

    data.params.check();
    if (!data.delta_n && !data.claimed_det_phi)
        fail(Errc::INVALID_INPUT, "need delta_n or det_phi (one may be solved for)");

    try {
        rep.mu = data.mu();
    } catch (const Error& e) {
        check("input_consistency", false, e.what());
        return rep;
    }
    rep.xi_value = xi(data.params);
    rep.h_n = top_h_polynomial(data.params);
    rep.psi_n = psi_top(data);

    // Left side of the identity, as printed in the isolated-singularity
    // corollary: (t-1)^{mu+(-1)^{n+1}} (t^d-1)^xi prod Delta_p.
    long sign = (data.params.n % 2 == 0) ? -1 : 1;
    mpz_class t1_exp = rep.mu + sign;
    RationalFn lhs = RationalFn(t_minus_1()).pow(t1_exp.get_si()) *
                     RationalFn(LaurentPoly::t(data.params.d) - LaurentPoly(1)).pow(rep.xi_value.get_si()) *
                     RationalFn(data.local_product());

    // Resolve delta_n: given, or solved from the claimed determinant.
    HypersurfaceData work = data;
    if (!work.delta_n) {
        RationalFn delta_sq = lhs / *data.claimed_det_phi;
        auto root = cyclotomic_sqrt(unit_class_representative(delta_sq));
        if (!root) {
            check("delta_solve", false, "lhs / det_phi is not the square of a cyclotomic polynomial");
            return rep;
        }
        work.delta_n = *root;
        check("delta_solve", true, "delta_n = " + format_poly(*root));
    }
    rep.delta_n = work.delta_n;
    RationalFn delta{*work.delta_n};

    try {
        rep.det_phi = det_phi(work);
        rep.phi = rep.det_phi;
        rep.r_n = r_top(work);
        auto [p1, p2] = error_terms(work);
        rep.phi1 = p1;
        rep.phi2 = p2;
    } catch (const Error& e) {
        check("divisibility", false, e.what());
        return rep;
    }
    check("divisibility", true);

    RationalFn used_det = data.claimed_det_phi ? *data.claimed_det_phi : rep.det_phi;
    if (data.claimed_det_phi) {
        bool same = unit_equal(*data.claimed_det_phi, rep.det_phi, UnitMode::PM_TK);
        check("claimed_det_phi", same,
              same ? "" : residual_diagnostic(*data.claimed_det_phi, rep.det_phi));
    }

    RationalFn rhs = delta * delta * used_det;
    bool id_pm = unit_equal(lhs, rhs, UnitMode::PM_TK);
    bool id_c = id_pm || unit_equal(lhs, rhs, UnitMode::C_TK);
    check("identity", id_pm,
          id_pm ? "" : (std::string(id_c ? "holds only up to c*t^k; " : "") + residual_diagnostic(lhs, rhs)));

    long deg_det = degree_ratfn(used_det);
    long deg_phi1 = rep.phi1.is_zero() ? 0 : degree_ratfn(rep.phi1);
    long deg_phi2 = rep.phi2.is_zero() ? 0 : degree_ratfn(rep.phi2);
    mpz_class dmu = data.params.d * rep.mu;

    check("determinant_degree_even", deg_det % 2 == 0, "deg det(phi) = " + std::to_string(deg_det));
    check("determinant_degree_bound", deg_det <= 2 * dmu,
          "deg det(phi) = " + std::to_string(deg_det) + " <= 2*d*mu = " + mpz_class(2 * dmu).get_str());
    check("error_term_degrees", deg_phi2 <= deg_phi1 && deg_phi1 <= dmu,
          "deg phi2 = " + std::to_string(deg_phi2) + ", deg phi1 = " + std::to_string(deg_phi1) +
              ", d*mu = " + dmu.get_str());
    check("degree_consistency", deg_det == deg_phi1 + deg_phi2,
          "deg det(phi) = " + std::to_string(deg_det) + ", deg phi1 + deg phi2 = " +
              std::to_string(deg_phi1 + deg_phi2));

    mpz_class full;  // (d-1)^{n+1}
    mpz_ui_pow_ui(full.get_mpz_t(), static_cast<unsigned long>(data.params.d - 1),
                  static_cast<unsigned long>(data.params.n + 1));
    mpz_class bound = full - dmu;
    long deg_delta = work.delta_n->total_degree();
    check("delta_lower_bound", deg_delta >= bound,
          "deg delta_n = " + std::to_string(deg_delta) + " >= (d-1)^{n+1} - d*mu = " + bound.get_str());

    CyclotomicFactorization f;
    LaurentPoly leftover;
    bool cyc = try_factor_cyclotomic(*work.delta_n, f, leftover);
    bool orders_ok = cyc;
    if (cyc)
        for (const auto& [m, mult] : f.factors)
            if (data.params.d % m != 0) orders_ok = false;
    check("root_order_gate", orders_ok,
          orders_ok ? "" : (cyc ? "delta_n has a root whose order does not divide d"
                                : "delta_n has non-cyclotomic factor " + format_poly(leftover)));
    return rep;
}

BoundaryProfile boundary_profile(const HypersurfaceData& data, const std::vector<LaurentPoly>& delta_list) {
    size_t n = static_cast<size_t>(data.params.n);
    if (delta_list.size() != n + 1) fail(Errc::SHAPE_MISMATCH, "need delta_0..delta_n");
    for (const auto& d : delta_list)
        if (d.is_zero()) fail(Errc::ZERO_INPUT, "delta orders must be nonzero");

    RationalFn det = det_phi(data);
    BoundaryProfile out;
    out.r.resize(2 * n + 1);
    for (size_t i = 0; i < n; ++i) {
        out.r[i] = RationalFn(delta_list[i]);
        out.r[2 * n - i] = RationalFn(delta_list[i].bar());
    }
    out.r[n] = RationalFn(delta_list[n]) * RationalFn(delta_list[n].bar()) * det;

    RationalFn tau(1);
    for (size_t i = 0; i <= 2 * n; ++i) tau *= (i % 2 == 0) ? out.r[i].inverse() : out.r[i];
    out.tau_boundary = tau;

    // Duality route must recover the same determinant.
    RationalFn tau_x(1);
    for (size_t i = 0; i <= n; ++i) {
        RationalFn d{delta_list[i]};
        tau_x *= (i % 2 == 0) ? d.inverse() : d;
    }
    UnitClass solved = solve_det_phi(tau_x, tau, data.params.n + 1);
    if (!unit_equal(solved.value, det, UnitMode::PM_TK))
        fail(Errc::INVALID_INPUT, "boundary torsion inconsistent with duality route");
    return out;
}

std::pair<mpz_class, long> dimension_bookkeeping(const HypersurfaceData& data, long deg_phi1, long deg_phi2) {
    mpz_class dmu = data.params.d * data.mu();
    if (deg_phi1 > dmu || deg_phi2 > deg_phi1)
        fail(Errc::BOUND_VIOLATION, "degree estimates violated: deg phi1 = " + std::to_string(deg_phi1) +
                                        ", deg phi2 = " + std::to_string(deg_phi2) + ", d*mu = " + dmu.get_str());
    return {dmu - deg_phi1, deg_phi1 - deg_phi2};
}

}  // namespace gq
