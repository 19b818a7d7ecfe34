#include "gf2od/selftest.hpp"

#include <random>

#include "gf2od/parity.hpp"
#include "gf2od/trees.hpp"
#include "gf2od/update.hpp"

namespace gf2od {

namespace {

SymMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
    std::vector<BitVector> rows(n, BitVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (rng() & 1u) {
                rows[i].set(j, true);
                if (i != j) rows[j].set(i, true);
            }
    return SymMatrix(std::move(rows));
}

SymMatrix symmetric_from_code(std::size_t n, std::uint64_t code) {
    std::vector<BitVector> rows(n, BitVector(n));
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++bit)
            if ((code >> bit) & 1u) {
                rows[i].set(j, true);
                if (i != j) rows[j].set(i, true);
            }
    return SymMatrix(std::move(rows));
}

BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1u) v.set(i, true);
    return v;
}

RootedTree random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> parent(n, RootedTree::npos);
    for (std::size_t v = 1; v < n; ++v)
        parent[v] = rng() % v;
    return RootedTree(std::move(parent), random_vector(n, rng));
}

} // namespace

SelftestReport run_selftest(std::uint64_t seed) {
    SelftestReport rep;
    std::mt19937_64 rng(seed);

    // Existence: Mx = diag(M) solvable for every symmetric M, exhaustively up to n = 4.
    {
        SelftestReport::Suite s{"diag-system-exhaustive", 0, 0};
        for (std::size_t n = 0; n <= 4; ++n) {
            std::uint64_t combos = std::uint64_t(1) << (n * (n + 1) / 2);
            for (std::uint64_t code = 0; code < combos; ++code) {
                SymMatrix m = symmetric_from_code(n, code);
                ++s.checks;
                try {
                    AffineSolutionSet sol = solve_diag_system(m);
                    if (mat_vec(m, sol.particular) != diag_vector(m)) ++s.failures;
                } catch (const std::logic_error&) {
                    ++s.failures;
                }
            }
        }
        rep.suites.push_back(s);
    }

    // Rank-one update: predicted nullity change vs recomputation, random (M, u).
    {
        SelftestReport::Suite s{"rank-one-update-randomized", 0, 0};
        for (int trial = 0; trial < 2000; ++trial) {
            std::size_t n = 1 + rng() % 32;
            SymMatrix m = random_symmetric(n, rng);
            KernelBasis kb = kernel_basis(m);
            BitVector u = random_vector(n, rng);
            ToggleStep step = apply_toggle(m, kb, u);
            ++s.checks;
            std::ptrdiff_t expect =
                std::ptrdiff_t(kernel_basis(step.matrix).dim()) - std::ptrdiff_t(kb.dim());
            if (expect != step.delta_nullity) ++s.failures;
        }
        rep.suites.push_back(s);
    }

    // Tree recursion: boundary counts vs exhaustive enumeration, n <= 14.
    {
        SelftestReport::Suite s{"tree-boundary-bruteforce", 0, 0};
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t n = 1 + rng() % 14;
            RootedTree t = random_tree(n, rng);
            SymMatrix m = tree_matrix(t);
            Natural counts[2][2] = {{0, 0}, {0, 0}};
            for (std::uint64_t code = 0; code < (std::uint64_t(1) << n); ++code) {
                BitVector x(n);
                for (std::size_t i = 0; i < n; ++i)
                    if ((code >> i) & 1u) x.set(i, true);
                BitVector mx = mat_vec(m, x);
                BitVector defect = mx ^ t.label;
                bool clean = true;
                for (std::size_t i = 0; i < n && clean; ++i)
                    if (i != t.root && defect.get(i)) clean = false;
                if (!clean) continue;
                counts[defect.get(t.root) ? 1 : 0][x.get(t.root) ? 1 : 0] += 1;
            }
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    ++s.checks;
                    if (pattern_count(t, a, b) != counts[a][b]) ++s.failures;
                }
        }
        rep.suites.push_back(s);
    }

    return rep;
}

} // namespace gf2od
