#pragma once

#include <cstddef>
#include <vector>

#include "gamma/error.hpp"
#include "gamma/laurent.hpp"
#include "gamma/ratfn.hpp"

namespace gq {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
    const T& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) fail(Errc::SHAPE_MISMATCH, "matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

    bool operator==(const Matrix&) const = default;

    Matrix<T> column(size_t c) const {
        Matrix<T> v(rows_, 1);
        for (size_t i = 0; i < rows_; ++i) v.at(i, 0) = at(i, c);
        return v;
    }

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> e_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using RatFnMatrix = Matrix<RationalFn>;

RatFnMatrix to_ratfn(const PolyMatrix& m);

/// Exact determinant over Q[t,t^-1] via fraction-free Bareiss elimination.
LaurentPoly determinant(const PolyMatrix& m);

/// Exact determinant over Q(t): denominators are cleared row by row,
/// then the Bareiss result is rescaled.
RationalFn determinant(const RatFnMatrix& m);

/// U*A*V = D with U, V invertible over Q[t,t^-1] (unit determinants).
/// invariant_factors are the unit-normalized diagonal entries of D in
/// divisibility order, zeros last.
struct SmithForm {
    PolyMatrix U;
    PolyMatrix D;
    PolyMatrix V;
    std::vector<LaurentPoly> invariant_factors;
};

SmithForm smith_normal_form(const PolyMatrix& a);

/// Basis of the column space of M over Q(t), together with a preimage:
/// basis columns are original columns of M (pivot columns), and
/// preimage maps each basis column to a domain vector hitting it, i.e.
/// M * preimage = basis. `col_order`, when nonempty, is the order in
/// which columns are considered (a permutation of 0..cols-1).
struct ColumnSpace {
    RatFnMatrix basis;     // rows x rank
    RatFnMatrix preimage;  // cols x rank
    std::vector<size_t> pivot_cols;
};

ColumnSpace column_space_basis(const RatFnMatrix& m, const std::vector<size_t>& col_order = {});

size_t rank(const RatFnMatrix& m);

/// Solve A*x = b over Q(t); returns false when inconsistent.
bool solve_linear(const RatFnMatrix& a, const RatFnMatrix& b, RatFnMatrix& x);

}  // namespace gq
