#pragma once

#include <utility>
#include <vector>

#include "gf2od/parity.hpp"
#include "gf2od/update.hpp"

namespace gf2od {

// Finite simple graph on vertices 0..n-1. Loops live in the label vector,
// never in the edge set.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    Graph() = default;
    Graph(std::size_t n_, std::vector<std::pair<std::size_t, std::size_t>> edges_);

    static Graph path(std::size_t n);
    static Graph empty(std::size_t n) { return Graph(n, {}); }
};

// A(G) + D_eps.
SymMatrix graph_matrix(const Graph& g, const BitVector& eps);

// Full solution set of M(G,eps) x = eps; never empty.
AffineSolutionSet solve_odd_domination(const Graph& g, const BitVector& eps);

// Per-vertex parity conditions: sum_{w~v} x_w + eps_v x_v = eps_v for all v.
bool verify_pattern(const Graph& g, const BitVector& eps, const BitVector& x);

struct LoopToggle {
    BitVector new_eps;   // eps with bit v flipped
    UpdateCase update;   // classification of M -> M + e_v e_v^T
    int delta_nullity = 0;
};

LoopToggle toggle_vertex_loop(const Graph& g, const BitVector& eps, std::size_t v);

} // namespace gf2od
