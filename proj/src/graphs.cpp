#include "gf2od/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gf2od {

Graph::Graph(std::size_t n_, std::vector<std::pair<std::size_t, std::size_t>> edges_)
    : n(n_), edges(std::move(edges_)) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("Graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop in edge set");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) throw std::invalid_argument("Graph: duplicate edge");
    }
}

Graph Graph::path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

SymMatrix graph_matrix(const Graph& g, const BitVector& eps) {
    if (eps.size() != g.n) throw std::invalid_argument("graph_matrix: label length mismatch");
    std::vector<BitVector> rows(g.n, BitVector(g.n));
    for (const auto& [u, v] : g.edges) {
        rows[u].set(v, true);
        rows[v].set(u, true);
    }
    for (std::size_t i = 0; i < g.n; ++i)
        if (eps.get(i)) rows[i].set(i, true);
    return SymMatrix(std::move(rows));
}

AffineSolutionSet solve_odd_domination(const Graph& g, const BitVector& eps) {
    SymMatrix m = graph_matrix(g, eps);
    auto x = solve(m, eps);
    if (!x) throw std::logic_error("solve_odd_domination: system unexpectedly unsolvable");
    return AffineSolutionSet{std::move(*x), kernel_basis(m), eps};
}

bool verify_pattern(const Graph& g, const BitVector& eps, const BitVector& x) {
    if (eps.size() != g.n || x.size() != g.n)
        throw std::invalid_argument("verify_pattern: length mismatch");
    return mat_vec(graph_matrix(g, eps), x) == eps;
}

LoopToggle toggle_vertex_loop(const Graph& g, const BitVector& eps, std::size_t v) {
    if (v >= g.n) throw std::invalid_argument("toggle_vertex_loop: vertex out of range");
    SymMatrix m = graph_matrix(g, eps);
    UpdateCase uc = classify_toggle(m, kernel_basis(m), BitVector::unit(g.n, v));
    LoopToggle t{eps, uc, uc.delta_nullity()};
    t.new_eps.flip(v);
    return t;
}

} // namespace gf2od
