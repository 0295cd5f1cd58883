#include "gamma/torsion.hpp"

namespace gq {

namespace {

struct TorsionWorkspace {
    std::vector<RatFnMatrix> boundaries;  // index i-1 holds boundary(i) over Q(t)
    std::vector<ColumnSpace> images;      // index i-1 holds the image data of boundary(i)
    std::vector<size_t> free_rank;        // per degree
};

TorsionWorkspace prepare(const BasedChainComplex& c, const TorsionOptions& opts) {
    validate(c);
    TorsionWorkspace w;
    size_t top = c.lengths.empty() ? 0 : c.top();
    for (size_t i = 1; i <= top; ++i) {
        w.boundaries.push_back(to_ratfn(c.boundary(i)));
        std::vector<size_t> order;
        if (i - 1 < opts.pivot_orders.size()) order = opts.pivot_orders[i - 1];
        w.images.push_back(column_space_basis(w.boundaries.back(), order));
    }
    for (size_t i = 0; i < c.lengths.size(); ++i) {
        size_t r_in = (i + 1 <= top) ? w.images[i].pivot_cols.size() : 0;
        size_t r_out = (i >= 1) ? w.images[i - 1].pivot_cols.size() : 0;
        w.free_rank.push_back(c.lengths[i] - r_in - r_out);
    }
    return w;
}

}  // namespace

TorsionValue reidemeister_torsion(const BasedChainComplex& c, const HomologyBasisChoice& h,
                                  const TorsionOptions& opts) {
    TorsionWorkspace w = prepare(c, opts);
    RationalFn tau(1);
    for (size_t i = 0; i < c.lengths.size(); ++i) {
        size_t n = c.lengths[i];
        size_t nb = (i + 1 <= c.top()) ? w.images[i].pivot_cols.size() : 0;
        size_t nh = w.free_rank[i];
        size_t nbhat = (i >= 1) ? w.images[i - 1].pivot_cols.size() : 0;

        const RatFnMatrix* hi = nullptr;
        if (nh > 0) {
            if (i >= h.size() || h[i].rows() != n || h[i].cols() != nh)
                fail(Errc::MISSING_HOMOLOGY_BASIS,
                     "degree " + std::to_string(i) + " needs " + std::to_string(nh) + " homology lifts");
            hi = &h[i];
            if (i >= 1) {
                RatFnMatrix img = w.boundaries[i - 1] * *hi;
                if (!img.is_zero()) fail(Errc::DEGENERATE_BASIS, "homology lift at degree " + std::to_string(i) + " is not a cycle");
            }
        }

        // Columns [b_i | h_i | bhat_{i-1}] expressed in the basis c_i.
        RatFnMatrix m(n, nb + nh + nbhat);
        for (size_t b = 0; b < nb; ++b)
            for (size_t r = 0; r < n; ++r) m.at(r, b) = w.images[i].basis.at(r, b);
        for (size_t k = 0; k < nh; ++k)
            for (size_t r = 0; r < n; ++r) m.at(r, nb + k) = hi->at(r, k);
        for (size_t b = 0; b < nbhat; ++b)
            for (size_t r = 0; r < n; ++r) m.at(r, nb + nh + b) = w.images[i - 1].preimage.at(r, b);
        if (m.cols() != n) fail(Errc::DEGENERATE_BASIS, "basis count mismatch at degree " + std::to_string(i));

        RationalFn det = determinant(m);
        if (det.is_zero()) fail(Errc::DEGENERATE_BASIS, "transition matrix singular at degree " + std::to_string(i));
        // Orientation calibrated on the circle complex: exponent (-1)^{i+1}.
        tau *= (i % 2 == 0) ? det.inverse() : det;
    }
    return TorsionValue{UnitClass{tau, UnitMode::PM_TK}};
}

RationalFn torsion_from_orders(const HomologyProfile& profile) {
    RationalFn tau(1);
    for (size_t i = 0; i < profile.degrees(); ++i) {
        if (profile.modules[i].free_rank != 0)
            fail(Errc::NOT_TORSION, "free homology of rank " + std::to_string(profile.modules[i].free_rank) +
                                        " at degree " + std::to_string(i));
        RationalFn d{profile.delta[i]};
        tau *= (i % 2 == 0) ? d.inverse() : d;
    }
    return unit_class_representative(tau);
}

RationalFn basis_change_factor(const BasedChainComplex& c, const HomologyBasisChoice& old_h,
                               const HomologyBasisChoice& new_h, const std::vector<RatFnMatrix>& old_c,
                               const std::vector<RatFnMatrix>& new_c) {
    TorsionWorkspace w = prepare(c, {});
    RationalFn factor(1);
    for (size_t i = 0; i < c.lengths.size(); ++i) {
        size_t n = c.lengths[i];
        bool even = (i % 2 == 0);

        // Chain-basis part: transition from old_c to new_c.
        if (i < old_c.size() || i < new_c.size()) {
            RatFnMatrix oc = (i < old_c.size() && old_c[i].rows() > 0) ? old_c[i] : RatFnMatrix::identity(n);
            RatFnMatrix nc = (i < new_c.size() && new_c[i].rows() > 0) ? new_c[i] : RatFnMatrix::identity(n);
            if (oc.rows() != n || oc.cols() != n || nc.rows() != n || nc.cols() != n)
                fail(Errc::DEGENERATE_BASIS, "chain basis at degree " + std::to_string(i) + " is not square");
            RatFnMatrix trans;
            if (!solve_linear(oc, nc, trans)) fail(Errc::DEGENERATE_BASIS, "old chain basis is singular");
            RationalFn dp = determinant(trans);
            if (dp.is_zero()) fail(Errc::DEGENERATE_BASIS, "chain basis change singular at degree " + std::to_string(i));
            factor *= even ? dp : dp.inverse();
        }

        // Homology part: express new_h in terms of (b_i, old_h_i) and take
        // the h-block of the coefficients.
        size_t nh = w.free_rank[i];
        if (nh == 0) continue;
        if (i >= old_h.size() || i >= new_h.size() || old_h[i].cols() != nh || new_h[i].cols() != nh)
            fail(Errc::MISSING_HOMOLOGY_BASIS, "homology basis missing at degree " + std::to_string(i));
        size_t nb = (i + 1 <= c.top()) ? w.images[i].pivot_cols.size() : 0;
        RatFnMatrix a(n, nb + nh);
        for (size_t b = 0; b < nb; ++b)
            for (size_t r = 0; r < n; ++r) a.at(r, b) = w.images[i].basis.at(r, b);
        for (size_t k = 0; k < nh; ++k)
            for (size_t r = 0; r < n; ++r) a.at(r, nb + k) = old_h[i].at(r, k);
        RatFnMatrix x;
        if (!solve_linear(a, new_h[i], x))
            fail(Errc::DEGENERATE_BASIS, "new homology lifts not in the old cycle span at degree " + std::to_string(i));
        RatFnMatrix s(nh, nh);
        for (size_t r = 0; r < nh; ++r)
            for (size_t k = 0; k < nh; ++k) s.at(r, k) = x.at(nb + r, k);
        RationalFn ds = determinant(s);
        if (ds.is_zero()) fail(Errc::DEGENERATE_BASIS, "homology basis change singular at degree " + std::to_string(i));
        factor *= even ? ds.inverse() : ds;
    }
    return factor;
}

UnitClass solve_det_phi(const RationalFn& tau_x, const RationalFn& tau_boundary, long m) {
    if (tau_x.is_zero() || tau_boundary.is_zero()) fail(Errc::ZERO_INPUT, "torsion inputs must be nonzero");
    RationalFn ratio = tau_boundary / (tau_x * tau_x.bar());
    RationalFn det = (m % 2 == 0) ? ratio : ratio.inverse();
    return UnitClass{unit_class_representative(det), UnitMode::PM_TK};
}

BasedChainComplex stabilize(const BasedChainComplex& c, size_t degree) {
    if (degree < 1) fail(Errc::INVALID_INPUT, "stabilization degree must be >= 1");
    BasedChainComplex s = c;
    while (s.lengths.size() <= degree) {
        size_t prev = s.lengths.empty() ? 0 : s.lengths.back();
        if (s.lengths.empty()) s.lengths.push_back(0);
        else {
            s.lengths.push_back(0);
            s.boundaries.push_back(PolyMatrix(prev, 0));
        }
    }
    auto grow_rows = [](PolyMatrix& m) {
        PolyMatrix g(m.rows() + 1, m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) g.at(i, j) = m.at(i, j);
        m = g;
    };
    auto grow_cols = [](PolyMatrix& m) {
        PolyMatrix g(m.rows(), m.cols() + 1);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) g.at(i, j) = m.at(i, j);
        m = g;
    };
    ++s.lengths[degree];
    ++s.lengths[degree - 1];
    PolyMatrix& d = s.boundaries[degree - 1];
    grow_rows(d);
    grow_cols(d);
    d.at(d.rows() - 1, d.cols() - 1) = LaurentPoly(1);
    if (degree + 1 <= s.top()) grow_rows(s.boundaries[degree]);
    if (degree >= 2) grow_cols(s.boundaries[degree - 2]);
    return s;
}

bool stabilization_check(const BasedChainComplex& c, size_t degree, const HomologyBasisChoice& h) {
    RationalFn before = reidemeister_torsion(c, h).value.value;
    BasedChainComplex s = stabilize(c, degree);
    HomologyBasisChoice hs = h;
    for (size_t i = 0; i < hs.size(); ++i) {
        if ((i == degree || i == degree - 1) && hs[i].cols() > 0) {
            RatFnMatrix padded(hs[i].rows() + 1, hs[i].cols());
            for (size_t r = 0; r < hs[i].rows(); ++r)
                for (size_t k = 0; k < hs[i].cols(); ++k) padded.at(r, k) = hs[i].at(r, k);
            hs[i] = padded;
        }
    }
    RationalFn after = reidemeister_torsion(s, hs).value.value;
    return unit_equal(before, after, UnitMode::PM_TK);
}

}  // namespace gq
