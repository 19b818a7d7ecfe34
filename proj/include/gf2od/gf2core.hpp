#pragma once

#include <optional>
#include <vector>

#include "gf2od/bits.hpp"

namespace gf2od {

// General (not necessarily symmetric) matrix as a list of packed rows.
struct Matrix {
    std::size_t nrows = 0;
    std::size_t ncols = 0;
    std::vector<BitVector> rows;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : nrows(r), ncols(c), rows(r, BitVector(c)) {}
    Matrix(std::size_t r, std::size_t c, std::vector<BitVector> rows_)
        : nrows(r), ncols(c), rows(std::move(rows_)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows[i].set(i, true);
        return m;
    }

    bool get(std::size_t i, std::size_t j) const { return rows[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows[i].set(j, v); }

    BitVector column(std::size_t j) const {
        BitVector c(nrows);
        for (std::size_t i = 0; i < nrows; ++i) c.set(i, rows[i].get(j));
        return c;
    }

    Matrix transpose() const {
        Matrix t(ncols, nrows);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j)
                if (rows[i].get(j)) t.rows[j].set(i, true);
        return t;
    }

    bool operator==(const Matrix&) const = default;
};

BitVector mat_vec(const Matrix& m, const BitVector& x);
Matrix mat_mul(const Matrix& a, const Matrix& b);

// Symmetric square matrix over F2; symmetry is validated on construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::vector<BitVector> rows);

    static SymMatrix zero(std::size_t n) {
        return SymMatrix(std::vector<BitVector>(n, BitVector(n)));
    }

    static SymMatrix identity(std::size_t n) {
        std::vector<BitVector> rows(n, BitVector(n));
        for (std::size_t i = 0; i < n; ++i) rows[i].set(i, true);
        return SymMatrix(std::move(rows));
    }

    // Rows given as 0/1 initializer lists, e.g. {{1,1},{1,0}}.
    static SymMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    std::size_t dim() const { return rows_.size(); }
    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    const BitVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<BitVector>& rows() const { return rows_; }

    Matrix to_matrix() const { return Matrix{dim(), dim(), rows_}; }

    bool operator==(const SymMatrix&) const = default;

private:
    std::vector<BitVector> rows_;
};

BitVector mat_vec(const SymMatrix& m, const BitVector& x);

// Basis of ker M; vectors are linearly independent and annihilated by M.
struct KernelBasis {
    std::vector<BitVector> vectors;

    std::size_t dim() const { return vectors.size(); }
};

// Reduced row-echelon form with the row-operation record: transform * input = rows.
// Pivot rule is leftmost nonzero column, topmost available row.
struct EchelonForm {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivot_cols;  // pivot_cols[i] is the pivot of rows[i]
    std::vector<BitVector> transform;     // rows of the accumulated transform
    std::size_t ncols = 0;

    std::size_t rank() const { return pivot_cols.size(); }
};

EchelonForm echelonize(const std::vector<BitVector>& rows, std::size_t ncols);
EchelonForm echelonize(const Matrix& m);
EchelonForm echelonize(const SymMatrix& m);

std::size_t rank(const SymMatrix& m);
std::size_t rank(const Matrix& m);

KernelBasis kernel_basis(const SymMatrix& m);
KernelBasis kernel_basis(const Matrix& m);

// Canonical solve: free variables are zero under the fixed pivot rule.
std::optional<BitVector> solve(const SymMatrix& m, const BitVector& b);
std::optional<BitVector> solve(const Matrix& m, const BitVector& b);

// b lies in Img(M) iff b is orthogonal to ker M (M symmetric).
bool image_contains(const SymMatrix& m, const BitVector& b);

// M + u u^T, the simultaneous loop toggle on the support of u.
SymMatrix add_outer(const SymMatrix& m, const BitVector& u);

} // namespace gf2od
