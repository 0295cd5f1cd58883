#include "gamma/chain.hpp"

namespace gq {

void validate(const BasedChainComplex& c) {
    if (c.lengths.empty()) {
        if (!c.boundaries.empty()) fail(Errc::SHAPE_MISMATCH, "boundaries without chain groups");
        return;
    }
    if (c.boundaries.size() != c.lengths.size() - 1)
        fail(Errc::SHAPE_MISMATCH, "expected one boundary per degree 1..top");
    for (size_t i = 1; i <= c.top(); ++i) {
        const PolyMatrix& d = c.boundary(i);
        if (d.rows() != c.lengths[i - 1] || d.cols() != c.lengths[i])
            fail(Errc::SHAPE_MISMATCH, "boundary " + std::to_string(i) + " has wrong shape");
    }
    for (size_t i = 2; i <= c.top(); ++i)
        if (!(c.boundary(i - 1) * c.boundary(i)).is_zero())
            fail(Errc::NOT_A_COMPLEX, "composite boundary nonzero at degree " + std::to_string(i));
}

LaurentPoly ModuleDecomposition::order() const {
    LaurentPoly p(1);
    for (const auto& f : torsion_factors) p *= f;
    return p.is_zero() ? p : unit_normalize(p).second;
}

HomologyProfile homology(const BasedChainComplex& c) {
    validate(c);
    HomologyProfile profile;
    size_t degrees = c.lengths.size();
    if (degrees == 0) return profile;

    // rank over Q(t) of each boundary; nonzero invariant factors count it.
    std::vector<size_t> bd_rank(degrees + 1, 0);
    std::vector<std::vector<LaurentPoly>> factors(degrees + 1);
    for (size_t i = 1; i <= c.top(); ++i) {
        SmithForm f = smith_normal_form(c.boundary(i));
        for (const auto& d : f.invariant_factors) {
            if (d.is_zero()) continue;
            ++bd_rank[i];
            if (!d.is_unit()) factors[i].push_back(d);
        }
    }
    for (size_t i = 0; i < degrees; ++i) {
        ModuleDecomposition m;
        m.free_rank = c.lengths[i] - bd_rank[i] - bd_rank[i + 1];
        m.torsion_factors = factors[i + 1];
        profile.delta.push_back(m.order());
        profile.modules.push_back(std::move(m));
    }
    return profile;
}

bool is_rationally_acyclic(const BasedChainComplex& c) {
    HomologyProfile p = homology(c);
    for (const auto& m : p.modules)
        if (m.free_rank != 0) return false;
    return true;
}

size_t jordan_count(const ModuleDecomposition& m, long order) {
    if (order < 1) fail(Errc::INVALID_INPUT, "root-of-unity order must be positive");
    size_t count = 0;
    for (const auto& f : m.torsion_factors) {
        factor_cyclotomic(f);  // NOT_CYCLOTOMIC gate
        if (divides(cyclotomic(order), f)) ++count;
    }
    return count;
}

size_t local_system_dim(const HomologyProfile& profile, long order, size_t degree) {
    size_t dim = 0;
    for (size_t i : {degree, degree - 1}) {
        if (i >= profile.degrees()) continue;  // C_{-1} = 0 and degrees above top
        if (profile.modules[i].free_rank != 0)
            fail(Errc::NOT_CYCLOTOMIC, "free homology at degree " + std::to_string(i));
        dim += jordan_count(profile.modules[i], order);
    }
    return dim;
}

size_t covering_dim(const HomologyProfile& profile, long dplus1, size_t degree) {
    if (dplus1 < 1) fail(Errc::INVALID_INPUT, "cover degree must be positive");
    size_t dim = 0;
    for (long m = 1; m <= dplus1; ++m)
        if (dplus1 % m == 0)
            dim += static_cast<size_t>(euler_phi(m)) * local_system_dim(profile, m, degree);
    return dim;
}

}  // namespace gq
