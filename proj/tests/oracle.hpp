// Brute-force oracles kept independent of the library's elimination path.
// Matrices are plain int grids and arithmetic is spelled out mod 2.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gf2od/gf2core.hpp"
#include "gf2od/trees.hpp"

namespace oracle {

using IntMat = std::vector<std::vector<int>>;
using IntVec = std::vector<int>;

inline IntMat to_grid(const gf2od::SymMatrix& m) {
    IntMat g(m.dim(), IntVec(m.dim(), 0));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            g[i][j] = m.get(i, j) ? 1 : 0;
    return g;
}

inline IntVec to_ints(const gf2od::BitVector& v) {
    IntVec x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = v.get(i) ? 1 : 0;
    return x;
}

inline gf2od::BitVector from_code(std::size_t n, std::uint64_t code) {
    gf2od::BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((code >> i) & 1u) v.set(i, true);
    return v;
}

inline IntVec apply_mod2(const IntMat& m, const IntVec& x) {
    IntVec y(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        int acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) acc += m[i][j] * x[j];
        y[i] = acc % 2;
    }
    return y;
}

// All solutions of Mx = b by exhaustive enumeration, n <= ~20.
inline std::vector<gf2od::BitVector> brute_solutions(const IntMat& m, const IntVec& b) {
    std::vector<gf2od::BitVector> out;
    const std::size_t n = b.size();
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << n); ++code) {
        gf2od::BitVector x = from_code(n, code);
        if (apply_mod2(m, to_ints(x)) == b) out.push_back(x);
    }
    return out;
}

// Rank as log2 of the row-span size; independent of any elimination.
inline std::size_t brute_rank(const IntMat& m) {
    const std::size_t rows = m.size();
    std::set<IntVec> span;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << rows); ++code) {
        IntVec acc(rows ? m[0].size() : 0, 0);
        for (std::size_t i = 0; i < rows; ++i)
            if ((code >> i) & 1u)
                for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = (acc[j] + m[i][j]) % 2;
        span.insert(acc);
    }
    std::size_t r = 0;
    while ((std::size_t(1) << r) < span.size()) ++r;
    return r;
}

inline gf2od::BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
    gf2od::BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1u) v.set(i, true);
    return v;
}

inline gf2od::SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
    std::vector<gf2od::BitVector> rows(n, gf2od::BitVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (rng() & 1u) {
                rows[i].set(j, true);
                if (i != j) rows[j].set(i, true);
            }
    return gf2od::SymMatrix(std::move(rows));
}

inline gf2od::SymMatrix symmetric_from_code(std::size_t n, std::uint64_t code) {
    std::vector<gf2od::BitVector> rows(n, gf2od::BitVector(n));
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++bit)
            if ((code >> bit) & 1u) {
                rows[i].set(j, true);
                if (i != j) rows[j].set(i, true);
            }
    return gf2od::SymMatrix(std::move(rows));
}

inline gf2od::RootedTree random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> parent(n, gf2od::RootedTree::npos);
    for (std::size_t v = 1; v < n; ++v) parent[v] = rng() % v;
    return gf2od::RootedTree(std::move(parent), random_vector(n, rng));
}

// N_T(alpha, beta) by exhaustive enumeration over all 2^n vectors.
inline gf2od::Natural brute_pattern_count(const gf2od::RootedTree& t, int alpha, int beta) {
    IntMat m = to_grid(gf2od::tree_matrix(t));
    IntVec rhs = to_ints(t.label);
    rhs[t.root] = (rhs[t.root] + alpha) % 2;
    gf2od::Natural count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << t.n); ++code) {
        gf2od::BitVector x = from_code(t.n, code);
        if ((x.get(t.root) ? 1 : 0) != beta) continue;
        if (apply_mod2(m, to_ints(x)) == rhs) ++count;
    }
    return count;
}

} // namespace oracle
