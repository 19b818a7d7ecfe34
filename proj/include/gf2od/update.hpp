#pragma once

#include <map>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "gf2od/gf2core.hpp"

namespace gf2od {

struct Graph;

using Natural = boost::multiprecision::cpp_int;

// Three-way behavior of M -> M + uu^T, with its certificate:
// z in ker M with u^T z = 1 when u is outside the image, otherwise y with My = u.
struct UpdateCase {
    enum class Tag { ZeroVector, NotInImage, InImageParityZero, InImageParityOne };

    Tag tag = Tag::ZeroVector;
    std::optional<BitVector> certificate;

    int delta_nullity() const {
        switch (tag) {
            case Tag::NotInImage:        return -1;
            case Tag::InImageParityOne:  return +1;
            default:                     return 0;
        }
    }
    int delta_rank() const { return -delta_nullity(); }
};

UpdateCase classify_toggle(const SymMatrix& m, const KernelBasis& kernel, const BitVector& u);

struct ToggleStep {
    SymMatrix matrix;     // M + uu^T
    KernelBasis kernel;   // kernel basis of the updated matrix
    UpdateCase update;
    int delta_nullity = 0;
};

// Applies the update and maintains the kernel basis incrementally.
ToggleStep apply_toggle(const SymMatrix& m, const KernelBasis& kernel, const BitVector& u);

// Counts of rank(A(G) + D) over diagonal matrices D.
struct RankHistogram {
    std::map<std::size_t, Natural> counts;

    Natural total() const {
        Natural t = 0;
        for (const auto& [r, c] : counts) t += c;
        return t;
    }

    bool operator==(const RankHistogram&) const = default;
};

// Visits all 2^n diagonal labelings in Gray-code order, one toggle per step.
// Throws std::invalid_argument if G.n exceeds max_n. threads >= 1 selects
// segmented parallel sweeping with a deterministic merge.
RankHistogram diagonal_sweep(const Graph& g, std::size_t max_n = 24, unsigned threads = 1);

} // namespace gf2od
