#pragma once

#include "gf2od/gf2core.hpp"

namespace gf2od {

// Solution set of Mx = rhs: particular solution plus a kernel basis.
// The full set is {particular + span of kernel}, of size 2^{kernel.dim()}.
struct AffineSolutionSet {
    BitVector particular;
    KernelBasis kernel;
    BitVector rhs;

    std::size_t dim() const { return kernel.dim(); }

    // Element selected by a subset of kernel basis vectors (bit i of `index`
    // selects kernel vector i). Used by tests to enumerate small sets.
    BitVector element(std::uint64_t index) const {
        BitVector x = particular;
        for (std::size_t i = 0; i < kernel.dim(); ++i)
            if ((index >> i) & 1u) x ^= kernel.vectors[i];
        return x;
    }
};

// Congruence normal form P^T M P = diag(1,...,1, H,...,H, 0) with
// unit_count ones, hyperbolic_count copies of [[0,1],[1,0]], then zeros.
struct NormalForm {
    Matrix transform;  // P, invertible
    std::size_t unit_count = 0;
    std::size_t hyperbolic_count = 0;
};

BitVector diag_vector(const SymMatrix& m);

// Mx = diag(M); always solvable for symmetric M.
AffineSolutionSet solve_diag_system(const SymMatrix& m);

// rank(M) mod 2; equals diag(M)^T x for every solution x of Mx = diag(M).
int parity_of_solutions(const SymMatrix& m);

NormalForm symmetric_normal_form(const SymMatrix& m);

// Checks diag(M)^T M^{-1} diag(M) == n (mod 2); requires M invertible.
bool inverse_parity_identity(const SymMatrix& m);

} // namespace gf2od
