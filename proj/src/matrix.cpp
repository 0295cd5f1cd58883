#include "gamma/matrix.hpp"

#include <numeric>
#include <optional>

namespace gq {

RatFnMatrix to_ratfn(const PolyMatrix& m) {
    RatFnMatrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = RationalFn(m.at(i, j));
    return r;
}

LaurentPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) fail(Errc::NOT_SQUARE, "determinant of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    PolyMatrix w = m;
    bool negate = false;
    LaurentPoly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            size_t r = k + 1;
            while (r < n && w.at(r, k).is_zero()) ++r;
            if (r == n) return LaurentPoly();
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                w.at(i, j) = divide_exact(w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j), prev);
        prev = w.at(k, k);
    }
    LaurentPoly det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

RationalFn determinant(const RatFnMatrix& m) {
    if (m.rows() != m.cols()) fail(Errc::NOT_SQUARE, "determinant of non-square matrix");
    size_t n = m.rows();
    PolyMatrix cleared(n, n);
    RationalFn scale(1);
    for (size_t i = 0; i < n; ++i) {
        LaurentPoly d(1);
        for (size_t j = 0; j < n; ++j) {
            const LaurentPoly& dj = m.at(i, j).den();
            d = divide_exact(d * dj, gcd(d, dj));
        }
        scale *= RationalFn(d);
        for (size_t j = 0; j < n; ++j) {
            RationalFn e = m.at(i, j) * RationalFn(d);
            cleared.at(i, j) = e.num();  // denominator reduced to 1
        }
    }
    return RationalFn(determinant(cleared)) / scale;
}

namespace {

void swap_rows(PolyMatrix& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(PolyMatrix& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] -= q * row[b]
void row_sub(PolyMatrix& m, size_t a, const LaurentPoly& q, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_sub(PolyMatrix& m, size_t a, const LaurentPoly& q, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void scale_row(PolyMatrix& m, size_t r, const LaurentPoly& u) {
    for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= u;
}

// Nonzero entry of minimal total degree in the trailing submatrix,
// ties broken by lowest (row, col).
std::optional<std::pair<size_t, size_t>> find_pivot(const PolyMatrix& b, size_t k) {
    std::optional<std::pair<size_t, size_t>> best;
    long best_deg = 0;
    for (size_t i = k; i < b.rows(); ++i)
        for (size_t j = k; j < b.cols(); ++j) {
            const LaurentPoly& e = b.at(i, j);
            if (e.is_zero()) continue;
            long deg = e.total_degree();
            if (!best || deg < best_deg) {
                best = {{i, j}};
                best_deg = deg;
            }
        }
    return best;
}

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& a) {
    size_t rows = a.rows(), cols = a.cols();
    SmithForm f;
    f.U = PolyMatrix::identity(rows);
    f.V = PolyMatrix::identity(cols);
    PolyMatrix b = a;

    size_t steps = std::min(rows, cols);
    for (size_t k = 0; k < steps; ++k) {
        for (;;) {
            auto piv = find_pivot(b, k);
            if (!piv) break;
            auto [pi, pj] = *piv;
            if (pi != k) {
                swap_rows(b, pi, k);
                swap_rows(f.U, pi, k);
            }
            if (pj != k) {
                swap_cols(b, pj, k);
                swap_cols(f.V, pj, k);
            }
            // Unit-normalize the pivot so division with remainder is
            // Euclidean in the total degree.
            auto [u, norm] = unit_normalize(b.at(k, k));
            LaurentPoly uinv = LaurentPoly::monomial(Rational(1) / u.coeff, -u.power);
            scale_row(b, k, uinv);
            scale_row(f.U, k, uinv);

            bool clean = true;
            for (size_t i = k + 1; i < rows; ++i) {
                if (b.at(i, k).is_zero()) continue;
                auto [q, r] = divmod(b.at(i, k), b.at(k, k));
                row_sub(b, i, q, k);
                row_sub(f.U, i, q, k);
                if (!r.is_zero()) clean = false;
            }
            for (size_t j = k + 1; j < cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                auto [q, r] = divmod(b.at(k, j), b.at(k, k));
                col_sub(b, j, q, k);
                col_sub(f.V, j, q, k);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;
            // Pivot row and column are clear; enforce that the pivot
            // divides every remaining entry so the chain d_k | d_{k+1} holds.
            bool divides_all = true;
            for (size_t i = k + 1; i < rows && divides_all; ++i)
                for (size_t j = k + 1; j < cols && divides_all; ++j)
                    if (!b.at(i, j).is_zero() && !divides(b.at(k, k), b.at(i, j))) {
                        row_sub(b, k, LaurentPoly(-1), i);  // row_k += row_i
                        row_sub(f.U, k, LaurentPoly(-1), i);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (b.at(k, k).is_zero()) break;  // trailing submatrix is zero
    }

    f.D = b;
    f.invariant_factors.clear();
    for (size_t k = 0; k < steps; ++k) {
        const LaurentPoly& d = b.at(k, k);
        f.invariant_factors.push_back(d.is_zero() ? d : unit_normalize(d).second);
    }
    // Re-normalize D itself so the certificate U*A*V = D matches the
    // reported factors exactly.
    for (size_t k = 0; k < steps; ++k) {
        if (b.at(k, k).is_zero()) continue;
        auto [u, norm] = unit_normalize(f.D.at(k, k));
        if (u.coeff == 1 && u.power == 0) continue;
        LaurentPoly uinv = LaurentPoly::monomial(Rational(1) / u.coeff, -u.power);
        scale_row(f.D, k, uinv);
        scale_row(f.U, k, uinv);
    }
    return f;
}

ColumnSpace column_space_basis(const RatFnMatrix& m, const std::vector<size_t>& col_order) {
    size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> order = col_order;
    if (order.empty()) {
        order.resize(cols);
        std::iota(order.begin(), order.end(), 0);
    }
    RatFnMatrix w = m;
    std::vector<bool> row_used(rows, false);
    std::vector<size_t> pivots;
    for (size_t j : order) {
        size_t pr = rows;
        for (size_t i = 0; i < rows; ++i)
            if (!row_used[i] && !w.at(i, j).is_zero()) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        row_used[pr] = true;
        pivots.push_back(j);
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || w.at(i, j).is_zero()) continue;
            RationalFn q = w.at(i, j) / w.at(pr, j);
            for (size_t c = 0; c < cols; ++c) w.at(i, c) -= q * w.at(pr, c);
        }
    }
    ColumnSpace cs;
    cs.pivot_cols = pivots;
    cs.basis = RatFnMatrix(rows, pivots.size());
    cs.preimage = RatFnMatrix(cols, pivots.size());
    for (size_t b = 0; b < pivots.size(); ++b) {
        for (size_t i = 0; i < rows; ++i) cs.basis.at(i, b) = m.at(i, pivots[b]);
        cs.preimage.at(pivots[b], b) = RationalFn(1);
    }
    return cs;
}

size_t rank(const RatFnMatrix& m) { return column_space_basis(m).pivot_cols.size(); }

bool solve_linear(const RatFnMatrix& a, const RatFnMatrix& b, RatFnMatrix& x) {
    if (a.rows() != b.rows()) fail(Errc::SHAPE_MISMATCH, "solve_linear shape mismatch");
    size_t rows = a.rows(), cols = a.cols(), rhs = b.cols();
    RatFnMatrix w(rows, cols + rhs);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) w.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < rhs; ++j) w.at(i, cols + j) = b.at(i, j);
    }
    std::vector<size_t> pivot_row_of_col(cols, rows);
    size_t next_row = 0;
    for (size_t j = 0; j < cols && next_row < rows; ++j) {
        size_t pr = rows;
        for (size_t i = next_row; i < rows; ++i)
            if (!w.at(i, j).is_zero()) {
                pr = i;
                break;
            }
        if (pr == rows) continue;
        if (pr != next_row)
            for (size_t c = 0; c < cols + rhs; ++c) std::swap(w.at(pr, c), w.at(next_row, c));
        pr = next_row;
        RationalFn inv = w.at(pr, j).inverse();
        for (size_t c = 0; c < cols + rhs; ++c) w.at(pr, c) *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || w.at(i, j).is_zero()) continue;
            RationalFn q = w.at(i, j);
            for (size_t c = 0; c < cols + rhs; ++c) w.at(i, c) -= q * w.at(pr, c);
        }
        pivot_row_of_col[j] = pr;
        ++next_row;
    }
    // Consistency: a row that is zero on the A-part must be zero on the rhs.
    for (size_t i = next_row; i < rows; ++i)
        for (size_t j = 0; j < rhs; ++j)
            if (!w.at(i, cols + j).is_zero()) return false;
    x = RatFnMatrix(cols, rhs);
    for (size_t j = 0; j < cols; ++j) {
        if (pivot_row_of_col[j] == rows) continue;  // free variable, set to 0
        for (size_t k = 0; k < rhs; ++k) x.at(j, k) = w.at(pivot_row_of_col[j], cols + k);
    }
    return true;
}

}  // namespace gq
