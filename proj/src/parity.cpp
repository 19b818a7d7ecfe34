#include "gf2od/parity.hpp"

#include <stdexcept>

namespace gf2od {

BitVector diag_vector(const SymMatrix& m) {
    BitVector d(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (m.get(i, i)) d.set(i, true);
    return d;
}

AffineSolutionSet solve_diag_system(const SymMatrix& m) {
    BitVector d = diag_vector(m);
    auto x = solve(m, d);
    if (!x) throw std::logic_error("solve_diag_system: diag(M) not in Img(M) for symmetric M");
    return AffineSolutionSet{std::move(*x), kernel_basis(m), std::move(d)};
}

int parity_of_solutions(const SymMatrix& m) {
    return int(rank(m) & 1u);
}

NormalForm symmetric_normal_form(const SymMatrix& m) {
    const std::size_t n = m.dim();

    // Basis vectors in original coordinates; blocks are split off in place.
    std::vector<BitVector> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) basis.push_back(BitVector::unit(n, i));

    auto form = [&](const BitVector& v, const BitVector& w) {
        return dot(v, mat_vec(m, w));
    };

    std::vector<BitVector> units;
    std::vector<BitVector> hyperbolics;  // in pairs

    // Split off unit blocks while some diagonal entry of the residual form is 1.
    std::vector<BitVector> rest = std::move(basis);
    for (;;) {
        std::size_t i = rest.size();
        for (std::size_t k = 0; k < rest.size(); ++k)
            if (form(rest[k], rest[k])) { i = k; break; }
        if (i == rest.size()) break;
        BitVector v = rest[i];
        rest.erase(rest.begin() + std::ptrdiff_t(i));
        for (BitVector& w : rest)
            if (form(w, v)) w ^= v;
        units.push_back(std::move(v));
    }

    // Residual form is alternating; split hyperbolic planes.
    for (;;) {
        std::size_t pi = rest.size(), pj = rest.size();
        for (std::size_t a = 0; a < rest.size() && pi == rest.size(); ++a)
            for (std::size_t b = a + 1; b < rest.size(); ++b)
                if (form(rest[a], rest[b])) { pi = a; pj = b; break; }
        if (pi == rest.size()) break;
        BitVector v = rest[pi];
        BitVector w = rest[pj];
        rest.erase(rest.begin() + std::ptrdiff_t(pj));
        rest.erase(rest.begin() + std::ptrdiff_t(pi));
        for (BitVector& x : rest) {
            bool cv = form(x, v);
            bool cw = form(x, w);
            if (cw) x ^= v;
            if (cv) x ^= w;
        }
        hyperbolics.push_back(std::move(v));
        hyperbolics.push_back(std::move(w));
    }

    NormalForm nf;
    nf.unit_count = units.size();
    nf.hyperbolic_count = hyperbolics.size() / 2;
    nf.transform = Matrix(n, n);
    std::size_t col = 0;
    for (const auto& v : units)
        { for (std::size_t i = 0; i < n; ++i) nf.transform.set(i, col, v.get(i)); ++col; }
    for (const auto& v : hyperbolics)
        { for (std::size_t i = 0; i < n; ++i) nf.transform.set(i, col, v.get(i)); ++col; }
    for (const auto& v : rest)
        { for (std::size_t i = 0; i < n; ++i) nf.transform.set(i, col, v.get(i)); ++col; }
    return nf;
}

bool inverse_parity_identity(const SymMatrix& m) {
    const std::size_t n = m.dim();
    if (rank(m) != n) throw std::domain_error("inverse_parity_identity: matrix is not invertible");
    BitVector d = diag_vector(m);
    auto x = solve(m, d);
    // solvable since M is invertible
    return dot(d, *x) == int(n & 1u);
}

} // namespace gf2od
