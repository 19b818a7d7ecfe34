#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gf2od/gf2core.hpp"

namespace gf2od {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Nonempty affine subset of F2^2 over points (alpha, beta), stored as a
// 4-bit membership mask with point (a,b) at bit 2a+b. The 11 valid masks
// are the 4 points, the 6 lines, and the full plane.
class AffineSubsetF2sq {
public:
    AffineSubsetF2sq() = default;
    explicit AffineSubsetF2sq(std::uint8_t mask);

    static AffineSubsetF2sq full() { return AffineSubsetF2sq(0xF); }

    bool contains(int alpha, int beta) const {
        return (mask_ >> (2 * (alpha & 1) + (beta & 1))) & 1u;
    }

    std::uint8_t mask() const { return mask_; }
    int size() const { return std::popcount(unsigned(mask_)); }
    int dim() const { return size() == 1 ? 0 : size() == 2 ? 1 : 2; }

    static bool valid_mask(std::uint8_t mask);

    bool operator==(const AffineSubsetF2sq&) const = default;

private:
    std::uint8_t mask_ = 0;
};

// Boundary summary of a rooted labeled subtree: the pattern count
// N(alpha, beta) is 2^k on L and 0 elsewhere.
struct BoundaryState {
    AffineSubsetF2sq L;
    Natural k = 0;

    bool operator==(const BoundaryState&) const = default;
};

// Rooted tree with a binary label per vertex. parent[root] = npos.
struct RootedTree {
    static constexpr std::size_t npos = std::size_t(-1);

    std::size_t n = 0;
    std::vector<std::size_t> parent;
    BitVector label;
    std::size_t root = 0;

    RootedTree() = default;
    RootedTree(std::vector<std::size_t> parent_, BitVector label_);

    std::vector<std::vector<std::size_t>> children() const;
};

// Complete d-ary tree of the given height with depth-dependent labels:
// a vertex whose subtree has height j gets label depth_labels[j].
RootedTree make_complete_dary(std::size_t d, std::size_t height,
                              const std::vector<int>& depth_labels);

// Edges of the underlying tree as a Graph-compatible list (u = parent).
SymMatrix tree_matrix(const RootedTree& t);

BoundaryState leaf_state(int label);
BoundaryState combine_children(int root_label, const std::vector<BoundaryState>& children);
BoundaryState boundary_state(const RootedTree& t);

Natural pattern_count(const RootedTree& t, int alpha, int beta);
Natural tree_nullity(const RootedTree& t);

// combine_children(label, d copies of state) without materializing the list.
BoundaryState dary_step(const BoundaryState& state, std::size_t d, int label);

// Per-residue closed form nullity(h) = c_r d^h + b_r for h >= h0, h ≡ r (mod p).
struct ResidueFormula {
    struct Residue {
        std::size_t r = 0;
        Rational c;
        Rational b;
    };

    std::size_t d = 0;
    std::size_t p = 0;   // period of the fitted formula
    std::size_t h0 = 0;  // first height in the periodic regime
    std::vector<Residue> per_residue;

    // Exact predicted nullity at height h >= h0; throws if the closed form
    // does not evaluate to a nonnegative integer.
    Natural predict(std::size_t h) const;
};

// Depth labels: a_j = preperiod[j] for j < |preperiod|, then periodic.
ResidueFormula dary_periodic_fit(std::size_t d, const std::vector<int>& preperiod,
                                 const std::vector<int>& period);

} // namespace gf2od
