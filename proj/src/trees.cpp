#include "gf2od/trees.hpp"

#include <map>
#include <stdexcept>

namespace gf2od {

AffineSubsetF2sq::AffineSubsetF2sq(std::uint8_t mask) : mask_(mask) {
    if (!valid_mask(mask))
        throw std::invalid_argument("AffineSubsetF2sq: mask is not a nonempty affine subset");
}

bool AffineSubsetF2sq::valid_mask(std::uint8_t mask) {
    int pc = std::popcount(unsigned(mask & 0xF));
    return pc == 1 || pc == 2 || mask == 0xF;
}

RootedTree::RootedTree(std::vector<std::size_t> parent_, BitVector label_)
    : n(parent_.size()), parent(std::move(parent_)), label(std::move(label_)) {
    if (label.size() != n) throw std::invalid_argument("RootedTree: label length mismatch");
    std::size_t roots = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] == npos) { root = v; ++roots; }
        else if (parent[v] >= n) throw std::invalid_argument("RootedTree: parent out of range");
    }
    if (roots != 1) throw std::invalid_argument("RootedTree: expected exactly one root");

    // depth computation doubles as acyclicity check
    std::vector<int> state(n, 0);  // 0 unvisited, 1 in progress, 2 done
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t u = v;
        std::vector<std::size_t> chain;
        while (state[u] == 0) {
            state[u] = 1;
            chain.push_back(u);
            if (parent[u] == npos) break;
            u = parent[u];
            if (state[u] == 1) throw std::invalid_argument("RootedTree: parent relation has a cycle");
        }
        for (std::size_t w : chain) state[w] = 2;
    }
}

std::vector<std::vector<std::size_t>> RootedTree::children() const {
    std::vector<std::vector<std::size_t>> ch(n);
    for (std::size_t v = 0; v < n; ++v)
        if (parent[v] != npos) ch[parent[v]].push_back(v);
    return ch;
}

RootedTree make_complete_dary(std::size_t d, std::size_t height,
                              const std::vector<int>& depth_labels) {
    if (d < 1) throw std::invalid_argument("make_complete_dary: arity must be >= 1");
    if (depth_labels.size() < height + 1)
        throw std::invalid_argument("make_complete_dary: need a label per subtree height");

    std::size_t n = 1;
    std::size_t layer = 1;
    for (std::size_t j = 0; j < height; ++j) { layer *= d; n += layer; }

    std::vector<std::size_t> parent(n, RootedTree::npos);
    BitVector label(n);
    // BFS numbering: layer of depth dep starts right after layer dep-1
    std::size_t next = 1;
    std::size_t layer_begin = 0, layer_size = 1;
    for (std::size_t dep = 0; dep < height; ++dep) {
        for (std::size_t i = 0; i < layer_size; ++i) {
            std::size_t v = layer_begin + i;
            for (std::size_t c = 0; c < d; ++c) parent[next++] = v;
        }
        layer_begin += layer_size;
        layer_size *= d;
    }
    // label by subtree height = height - depth
    layer_begin = 0; layer_size = 1;
    for (std::size_t dep = 0; dep <= height; ++dep) {
        if (depth_labels[height - dep])
            for (std::size_t i = 0; i < layer_size; ++i) label.set(layer_begin + i, true);
        layer_begin += layer_size;
        layer_size *= d;
    }
    return RootedTree(std::move(parent), std::move(label));
}

SymMatrix tree_matrix(const RootedTree& t) {
    std::vector<BitVector> rows(t.n, BitVector(t.n));
    for (std::size_t v = 0; v < t.n; ++v) {
        if (t.parent[v] != RootedTree::npos) {
            rows[v].set(t.parent[v], true);
            rows[t.parent[v]].set(v, true);
        }
        if (t.label.get(v)) rows[v].set(v, true);
    }
    return SymMatrix(std::move(rows));
}

BoundaryState leaf_state(int label) {
    // label 0: equation eps x_r = alpha forces alpha = 0, beta free
    // label 1: forces alpha + beta = 1
    std::uint8_t mask = label ? std::uint8_t((1u << 1) | (1u << 2))   // {(0,1),(1,0)}
                              : std::uint8_t((1u << 0) | (1u << 1));  // {(0,0),(0,1)}
    return BoundaryState{AffineSubsetF2sq(mask), 0};
}

namespace {

struct FiberSummary {
    bool feasible = false;
    bool both_alpha = false;   // free fibers present: both alpha values occur
    int forced_alpha = 0;      // valid when !both_alpha
    Natural s = 0;             // log2 of the gamma-tuple count
};

// Root equation: sum gamma_i + eps*beta = eps + alpha.
FiberSummary analyze_beta(int beta, int root_label, std::size_t free_count,
                          int forced_sum, bool any_empty) {
    FiberSummary fs;
    if (any_empty) return fs;
    fs.feasible = true;
    if (free_count >= 1) {
        fs.both_alpha = true;
        fs.s = Natural(free_count - 1);
    } else {
        fs.forced_alpha = forced_sum ^ (root_label & beta) ^ root_label;
        fs.s = 0;
    }
    return fs;
}

BoundaryState assemble(int root_label, const FiberSummary fs[2], const Natural& k_children) {
    std::uint8_t mask = 0;
    bool have_s = false;
    Natural s;
    for (int beta = 0; beta < 2; ++beta) {
        if (!fs[beta].feasible) continue;
        if (fs[beta].both_alpha) {
            mask |= std::uint8_t(1u << (0 + beta));
            mask |= std::uint8_t(1u << (2 + beta));
        } else {
            mask |= std::uint8_t(1u << (2 * fs[beta].forced_alpha + beta));
        }
        if (!have_s) { s = fs[beta].s; have_s = true; }
        else if (s != fs[beta].s)
            throw std::logic_error("combine_children: gamma-tuple count not uniform over feasible cells");
    }
    if (mask == 0)
        throw std::logic_error("combine_children: empty boundary set");
    if (!AffineSubsetF2sq::valid_mask(mask))
        throw std::logic_error("combine_children: boundary set is not affine");
    (void)root_label;
    return BoundaryState{AffineSubsetF2sq(mask), k_children + s};
}

} // namespace

BoundaryState combine_children(int root_label, const std::vector<BoundaryState>& children) {
    root_label &= 1;
    if (children.empty()) return leaf_state(root_label);

    Natural k_children = 0;
    for (const auto& c : children) k_children += c.k;

    FiberSummary fs[2];
    for (int beta = 0; beta < 2; ++beta) {
        bool any_empty = false;
        std::size_t free_count = 0;
        int forced_sum = 0;
        for (const auto& c : children) {
            bool g0 = c.L.contains(beta, 0);
            bool g1 = c.L.contains(beta, 1);
            if (!g0 && !g1) { any_empty = true; break; }
            if (g0 && g1) ++free_count;
            else if (g1) forced_sum ^= 1;
        }
        fs[beta] = analyze_beta(beta, root_label, free_count, forced_sum, any_empty);
    }
    return assemble(root_label, fs, k_children);
}

BoundaryState boundary_state(const RootedTree& t) {
    auto ch = t.children();
    // reverse BFS order processes every child before its parent
    std::vector<std::size_t> order;
    order.reserve(t.n);
    order.push_back(t.root);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t c : ch[order[i]]) order.push_back(c);

    std::vector<BoundaryState> state(t.n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t v = *it;
        std::vector<BoundaryState> cs;
        cs.reserve(ch[v].size());
        for (std::size_t c : ch[v]) cs.push_back(state[c]);
        state[v] = combine_children(t.label.get(v) ? 1 : 0, cs);
    }
    return state[t.root];
}

Natural pattern_count(const RootedTree& t, int alpha, int beta) {
    BoundaryState bs = boundary_state(t);
    if (!bs.L.contains(alpha, beta)) return 0;
    return Natural(1) << bs.k.convert_to<unsigned>();
}

Natural tree_nullity(const RootedTree& t) {
    BoundaryState bs = boundary_state(t);
    std::uint8_t alpha0 = bs.L.mask() & 0b0011u;  // points (0,0),(0,1)
    if (alpha0 == 0)
        throw std::logic_error("tree_nullity: L has no point with alpha = 0");
    int d = std::popcount(unsigned(alpha0)) == 2 ? 1 : 0;
    return bs.k + d;
}

namespace {

struct DaryStep {
    BoundaryState state;
    Natural s;
};

DaryStep dary_step_ex(const BoundaryState& state, std::size_t d, int label) {
    if (d < 1) throw std::invalid_argument("dary_step: arity must be >= 1");
    label &= 1;

    FiberSummary fs[2];
    for (int beta = 0; beta < 2; ++beta) {
        bool g0 = state.L.contains(beta, 0);
        bool g1 = state.L.contains(beta, 1);
        bool any_empty = (!g0 && !g1);
        std::size_t free_count = (g0 && g1) ? d : 0;
        int forced_sum = (!any_empty && !g0 && g1) ? int(d & 1u) : 0;
        fs[beta] = analyze_beta(beta, label, free_count, forced_sum, any_empty);
    }
    BoundaryState out = assemble(label, fs, state.k * Natural(d));
    Natural s = out.k - state.k * Natural(d);
    return DaryStep{std::move(out), std::move(s)};
}

} // namespace

BoundaryState dary_step(const BoundaryState& state, std::size_t d, int label) {
    return dary_step_ex(state, d, label).state;
}

Natural ResidueFormula::predict(std::size_t h) const {
    if (h < h0) throw std::invalid_argument("ResidueFormula::predict: height below threshold");
    const Residue& res = per_residue.at(h % p);
    Rational value = res.c * Rational(boost::multiprecision::pow(Natural(d), unsigned(h))) + res.b;
    if (boost::multiprecision::denominator(value) != 1 || value < 0)
        throw std::logic_error("ResidueFormula::predict: closed form is not a nonnegative integer");
    return boost::multiprecision::numerator(value);
}

ResidueFormula dary_periodic_fit(std::size_t d, const std::vector<int>& preperiod,
                                 const std::vector<int>& period) {
    if (d < 2) throw std::invalid_argument("dary_periodic_fit: arity must be >= 2");
    if (period.empty()) throw std::invalid_argument("dary_periodic_fit: period must be nonempty");

    auto label_at = [&](std::size_t j) {
        return j < preperiod.size() ? (preperiod[j] & 1)
                                    : (period[(j - preperiod.size()) % period.size()] & 1);
    };

    struct Snapshot {
        BoundaryState state;  // at height h
        Natural s;            // increment used stepping h -> h+1
    };
    std::vector<Snapshot> traj;
    traj.push_back({leaf_state(label_at(0)), 0});

    // the pair (L, label phase) can take at most 11 * |period| values
    std::map<std::pair<std::uint8_t, std::size_t>, std::size_t> seen;
    std::size_t cycle_start = 0, cycle_len = 0;
    const std::size_t guard = preperiod.size() + 11 * period.size() + 2;
    for (std::size_t h = 0;; ++h) {
        if (h >= preperiod.size()) {
            std::size_t phase = (h - preperiod.size()) % period.size();
            auto key = std::make_pair(traj[h].state.L.mask(), phase);
            auto [it, fresh] = seen.emplace(key, h);
            if (!fresh) {
                cycle_start = it->second;
                cycle_len = h - it->second;
                break;
            }
        }
        if (h > guard) throw std::logic_error("dary_periodic_fit: cycle not detected within bound");
        DaryStep step = dary_step_ex(traj[h].state, d, label_at(h + 1));
        traj[h].s = std::move(step.s);
        traj.push_back({std::move(step.state), 0});
    }

    // extend the trajectory so every residue anchor has a full cycle of s-values
    while (traj.size() < cycle_start + 2 * cycle_len + 1) {
        std::size_t h = traj.size() - 1;
        DaryStep step = dary_step_ex(traj[h].state, d, label_at(h + 1));
        traj[h].s = std::move(step.s);
        traj.push_back({std::move(step.state), 0});
    }

    ResidueFormula rf;
    rf.d = d;
    rf.p = cycle_len;
    rf.h0 = cycle_start;

    const Natural dP = boost::multiprecision::pow(Natural(d), unsigned(cycle_len));
    const Rational denom = Rational(dP - 1);
    for (std::size_t r = 0; r < cycle_len; ++r) {
        std::size_t hr = cycle_start + (r + cycle_len - cycle_start % cycle_len) % cycle_len;
        // k_{h+p} = d^p k_h + C on this residue class
        Natural C = 0;
        for (std::size_t j = 0; j < cycle_len; ++j)
            C = C * d + traj[hr + j].s;
        Rational shift = Rational(C) / denom;
        Rational c = (Rational(traj[hr].state.k) + shift)
                     / Rational(boost::multiprecision::pow(Natural(d), unsigned(hr)));
        std::uint8_t alpha0 = traj[hr].state.L.mask() & 0b0011u;
        if (alpha0 == 0) throw std::logic_error("dary_periodic_fit: L misses alpha = 0");
        int dim0 = std::popcount(unsigned(alpha0)) == 2 ? 1 : 0;
        Rational b = -shift + dim0;
        rf.per_residue.push_back({r, std::move(c), std::move(b)});
    }
    return rf;
}

} // namespace gf2od
