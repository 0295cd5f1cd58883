#include "gamma/json_io.hpp"

#include <fstream>

namespace gq {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::INVALID_INPUT, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long to_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<long>();
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IO_ERROR, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(Errc::PARSE_ERROR, path + ": " + e.what());
    }
}

PolyMatrix poly_matrix_from_json(const Json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    size_t rows = j.size();
    size_t cols = rows ? j.at(0).size() : 0;
    PolyMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        const Json& row = j.at(r);
        if (!row.is_array() || row.size() != cols) bad("matrix rows must be equal-length arrays");
        for (size_t c = 0; c < cols; ++c) {
            if (!row.at(c).is_string()) bad("matrix entries must be polynomial strings");
            m.at(r, c) = parse_poly(row.at(c).get<std::string>());
        }
    }
    return m;
}

RatFnMatrix ratfn_matrix_from_json(const Json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    size_t rows = j.size();
    size_t cols = rows ? j.at(0).size() : 0;
    RatFnMatrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        const Json& row = j.at(r);
        if (!row.is_array() || row.size() != cols) bad("matrix rows must be equal-length arrays");
        for (size_t c = 0; c < cols; ++c) {
            if (!row.at(c).is_string()) bad("matrix entries must be strings");
            m.at(r, c) = parse_ratfn(row.at(c).get<std::string>());
        }
    }
    return m;
}

Json to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(format_poly(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

BasedChainComplex complex_from_json(const Json& j) {
    BasedChainComplex c;
    for (const Json& len : field(j, "lengths")) c.lengths.push_back(static_cast<size_t>(to_long(len, "length")));
    const Json& bds = field(j, "boundaries");
    if (!bds.is_array()) bad("boundaries must be an array of matrices");
    for (const Json& b : bds) c.boundaries.push_back(poly_matrix_from_json(b));
    if (c.boundaries.size() + 1 != c.lengths.size() && !(c.lengths.empty() && c.boundaries.empty()))
        bad("need one boundary per degree 1..top");
    validate(c);
    return c;
}

Json to_json(const BasedChainComplex& c) {
    Json j;
    j["lengths"] = c.lengths;
    Json bds = Json::array();
    for (const auto& b : c.boundaries) bds.push_back(to_json(b));
    j["boundaries"] = std::move(bds);
    return j;
}

HomologyBasisChoice homology_basis_from_json(const Json& j) {
    if (!j.is_array()) bad("homology basis must be an array of matrices");
    HomologyBasisChoice h;
    for (const Json& m : j) h.push_back(ratfn_matrix_from_json(m));
    return h;
}

HypersurfaceData dataset_from_json(const Json& j) {
    HypersurfaceData d;
    d.params.n = to_long(field(j, "n"), "n");
    d.params.d = to_long(field(j, "d"), "d");
    d.params.check();
    const Json& sings = field(j, "singularities");
    if (!sings.is_array()) bad("singularities must be an array");
    for (const Json& s : sings) {
        if (s.contains("brieskorn")) {
            BrieskornExponents e;
            for (const Json& a : s.at("brieskorn")) e.exponents.push_back(to_long(a, "brieskorn exponent"));
            d.singularities.push_back(SingularPointData::from_brieskorn(e));
        } else {
            SingularPointData p;
            if (!field(s, "delta_p").is_string()) bad("delta_p must be a polynomial string");
            p.delta_p = parse_poly(s.at("delta_p").get<std::string>());
            p.mu_p = to_long(field(s, "mu_p"), "mu_p");
            d.singularities.push_back(std::move(p));
        }
    }
    if (j.contains("delta_n")) d.delta_n = parse_poly(j.at("delta_n").get<std::string>());
    if (j.contains("det_phi")) d.claimed_det_phi = parse_ratfn(j.at("det_phi").get<std::string>());
    return d;
}

Json to_json(const HypersurfaceData& d) {
    Json j;
    j["n"] = d.params.n;
    j["d"] = d.params.d;
    Json sings = Json::array();
    for (const auto& s : d.singularities) {
        Json e;
        if (s.brieskorn)
            e["brieskorn"] = s.brieskorn->exponents;
        else {
            e["delta_p"] = format_poly(s.delta_p);
            e["mu_p"] = s.mu_p.get_si();
        }
        sings.push_back(std::move(e));
    }
    j["singularities"] = std::move(sings);
    if (d.delta_n) j["delta_n"] = format_poly(*d.delta_n);
    if (d.claimed_det_phi) j["det_phi"] = format_ratfn(*d.claimed_det_phi);
    return j;
}

Json to_json(const HomologyProfile& p) {
    Json degrees = Json::array();
    for (size_t i = 0; i < p.degrees(); ++i) {
        Json m;
        m["degree"] = i;
        m["free_rank"] = p.modules[i].free_rank;
        Json tf = Json::array();
        for (const auto& f : p.modules[i].torsion_factors) tf.push_back(format_poly(f));
        m["torsion_factors"] = std::move(tf);
        m["delta"] = format_poly(p.delta[i]);
        degrees.push_back(std::move(m));
    }
    Json j;
    j["homology"] = std::move(degrees);
    return j;
}

Json to_json(const SmithForm& s) {
    Json j;
    j["D"] = to_json(s.D);
    j["U"] = to_json(s.U);
    j["V"] = to_json(s.V);
    Json inv = Json::array();
    for (const auto& f : s.invariant_factors) inv.push_back(format_poly(f));
    j["invariant_factors"] = std::move(inv);
    return j;
}

Json to_json(const CyclotomicFactorization& f) {
    Json j;
    Json facs;
    for (const auto& [m, mult] : f.factors) facs[std::to_string(m)] = mult;
    j["factors"] = facs.is_null() ? Json::object() : facs;
    Json u;
    u["coeff"] = rational_to_string(f.unit.coeff);
    u["power"] = f.unit.power;
    j["unit"] = std::move(u);
    return j;
}

Json to_json(const IdentityReport& r) {
    Json j;
    j["mu"] = r.mu.get_str();
    j["xi"] = r.xi_value.get_str();
    j["h_n"] = format_ratfn(r.h_n);
    j["psi_n"] = format_poly(r.psi_n);
    if (!r.r_n.is_zero()) j["r_n"] = format_ratfn(r.r_n);
    if (!r.det_phi.is_zero()) j["det_phi"] = format_ratfn(r.det_phi);
    if (!r.phi1.is_zero()) j["phi1"] = format_ratfn(r.phi1);
    if (!r.phi2.is_zero()) j["phi2"] = format_ratfn(r.phi2);
    if (r.delta_n) j["delta_n"] = format_poly(*r.delta_n);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["all_passed"] = r.all_passed();
    return j;
}

}  // namespace gq
