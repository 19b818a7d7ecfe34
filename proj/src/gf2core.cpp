#include "gf2od/gf2core.hpp"

#include <stdexcept>

namespace gf2od {

BitVector mat_vec(const Matrix& m, const BitVector& x) {
    if (x.size() != m.ncols) throw std::invalid_argument("mat_vec: length mismatch");
    BitVector y(m.nrows);
    for (std::size_t i = 0; i < m.nrows; ++i)
        if (dot(m.rows[i], x)) y.set(i, true);
    return y;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.ncols != b.nrows) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix c(a.nrows, b.ncols);
    for (std::size_t i = 0; i < a.nrows; ++i)
        for (std::size_t k = 0; k < a.ncols; ++k)
            if (a.rows[i].get(k)) c.rows[i] ^= b.rows[k];
    return c;
}

SymMatrix::SymMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_[i].size() != n) throw std::invalid_argument("SymMatrix: row length != dimension");
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows_[i].get(j) != rows_[j].get(i))
                throw std::invalid_argument("SymMatrix: matrix is not symmetric");
    }
}

SymMatrix SymMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<BitVector> rv;
    rv.reserve(rows.size());
    for (const auto& r : rows) {
        BitVector v(rows.size());
        std::size_t j = 0;
        for (int b : r) {
            if (j >= rows.size()) throw std::invalid_argument("SymMatrix: ragged rows");
            v.set(j++, b != 0);
        }
        if (j != rows.size()) throw std::invalid_argument("SymMatrix: ragged rows");
        rv.push_back(std::move(v));
    }
    return SymMatrix(std::move(rv));
}

BitVector mat_vec(const SymMatrix& m, const BitVector& x) {
    if (x.size() != m.dim()) throw std::invalid_argument("mat_vec: length mismatch");
    BitVector y(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (dot(m.row(i), x)) y.set(i, true);
    return y;
}

EchelonForm echelonize(const std::vector<BitVector>& input, std::size_t ncols) {
    const std::size_t nrows = input.size();
    EchelonForm ef;
    ef.ncols = ncols;
    std::vector<BitVector> work = input;
    std::vector<BitVector> tr;
    tr.reserve(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        if (work[i].size() != ncols) throw std::invalid_argument("echelonize: ragged rows");
        tr.push_back(BitVector::unit(nrows, i));
    }

    std::size_t next = 0;  // next row slot to fill
    for (std::size_t col = 0; col < ncols && next < nrows; ++col) {
        // topmost available row with a 1 in this column
        std::size_t piv = nrows;
        for (std::size_t r = next; r < nrows; ++r) {
            if (work[r].get(col)) { piv = r; break; }
        }
        if (piv == nrows) continue;
        std::swap(work[next], work[piv]);
        std::swap(tr[next], tr[piv]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r != next && work[r].get(col)) {
                work[r] ^= work[next];
                tr[r] ^= tr[next];
            }
        }
        ef.pivot_cols.push_back(col);
        ++next;
    }
    ef.rows = std::move(work);
    ef.transform = std::move(tr);
    return ef;
}

EchelonForm echelonize(const Matrix& m) { return echelonize(m.rows, m.ncols); }
EchelonForm echelonize(const SymMatrix& m) { return echelonize(m.rows(), m.dim()); }

std::size_t rank(const SymMatrix& m) { return echelonize(m).rank(); }
std::size_t rank(const Matrix& m) { return echelonize(m).rank(); }

namespace {

KernelBasis kernel_from_echelon(const EchelonForm& ef) {
    KernelBasis kb;
    const std::size_t n = ef.ncols;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : ef.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(n);
        v.set(f, true);
        for (std::size_t i = 0; i < ef.pivot_cols.size(); ++i)
            if (ef.rows[i].get(f)) v.set(ef.pivot_cols[i], true);
        kb.vectors.push_back(std::move(v));
    }
    return kb;
}

std::optional<BitVector> solve_from_echelon(const EchelonForm& ef, const BitVector& b) {
    const std::size_t nrows = ef.transform.empty() ? 0 : ef.transform.size();
    if (b.size() != nrows) throw std::invalid_argument("solve: rhs length mismatch");
    // apply the recorded row operations to b
    BitVector rhs(nrows);
    for (std::size_t i = 0; i < nrows; ++i)
        if (dot(ef.transform[i], b)) rhs.set(i, true);
    const std::size_t r = ef.rank();
    for (std::size_t i = r; i < nrows; ++i)
        if (rhs.get(i)) return std::nullopt;
    BitVector x(ef.ncols);
    for (std::size_t i = 0; i < r; ++i)
        if (rhs.get(i)) x.set(ef.pivot_cols[i], true);
    return x;
}

} // namespace

KernelBasis kernel_basis(const SymMatrix& m) { return kernel_from_echelon(echelonize(m)); }
KernelBasis kernel_basis(const Matrix& m) { return kernel_from_echelon(echelonize(m)); }

std::optional<BitVector> solve(const SymMatrix& m, const BitVector& b) {
    if (b.size() != m.dim()) throw std::invalid_argument("solve: rhs length mismatch");
    return solve_from_echelon(echelonize(m), b);
}

std::optional<BitVector> solve(const Matrix& m, const BitVector& b) {
    if (b.size() != m.nrows) throw std::invalid_argument("solve: rhs length mismatch");
    return solve_from_echelon(echelonize(m), b);
}

bool image_contains(const SymMatrix& m, const BitVector& b) {
    if (b.size() != m.dim()) throw std::invalid_argument("image_contains: length mismatch");
    for (const BitVector& z : kernel_basis(m).vectors)
        if (dot(b, z)) return false;
    return true;
}

SymMatrix add_outer(const SymMatrix& m, const BitVector& u) {
    if (u.size() != m.dim()) throw std::invalid_argument("add_outer: length mismatch");
    std::vector<BitVector> rows = m.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (u.get(i)) rows[i] ^= u;
    return SymMatrix(std::move(rows));
}

} // namespace gf2od
