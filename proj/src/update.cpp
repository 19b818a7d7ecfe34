#include "gf2od/update.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "gf2od/graphs.hpp"

namespace gf2od {

UpdateCase classify_toggle(const SymMatrix& m, const KernelBasis& kernel, const BitVector& u) {
    if (u.size() != m.dim()) throw std::invalid_argument("classify_toggle: length mismatch");
    if (u.is_zero()) return UpdateCase{UpdateCase::Tag::ZeroVector, std::nullopt};

    for (const BitVector& z : kernel.vectors)
        if (dot(u, z)) return UpdateCase{UpdateCase::Tag::NotInImage, z};

    // u is orthogonal to ker M, so My = u is solvable
    auto y = solve(m, u);
    if (!y) throw std::logic_error("classify_toggle: My = u unsolvable despite orthogonality");
    auto tag = dot(u, *y) ? UpdateCase::Tag::InImageParityOne : UpdateCase::Tag::InImageParityZero;
    return UpdateCase{tag, std::move(*y)};
}

ToggleStep apply_toggle(const SymMatrix& m, const KernelBasis& kernel, const BitVector& u) {
    UpdateCase uc = classify_toggle(m, kernel, u);
    ToggleStep step;
    step.matrix = add_outer(m, u);
    step.delta_nullity = uc.delta_nullity();

    switch (uc.tag) {
        case UpdateCase::Tag::ZeroVector:
        case UpdateCase::Tag::InImageParityZero:
            step.kernel = kernel;
            break;
        case UpdateCase::Tag::NotInImage: {
            // restrict to the hyperplane u^T x = 0: fold the lowest-index
            // non-orthogonal basis vector into the others and drop it
            std::size_t star = kernel.vectors.size();
            for (std::size_t i = 0; i < kernel.vectors.size(); ++i)
                if (dot(u, kernel.vectors[i])) { star = i; break; }
            for (std::size_t i = 0; i < kernel.vectors.size(); ++i) {
                if (i == star) continue;
                BitVector v = kernel.vectors[i];
                if (dot(u, v)) v ^= kernel.vectors[star];
                step.kernel.vectors.push_back(std::move(v));
            }
            break;
        }
        case UpdateCase::Tag::InImageParityOne:
            step.kernel = kernel;
            step.kernel.vectors.push_back(*uc.certificate);
            break;
    }
    step.update = std::move(uc);
    return step;
}

namespace {

// Gray code of t; consecutive values differ in bit countr_zero(t+1).
inline std::uint64_t gray(std::uint64_t t) { return t ^ (t >> 1); }

// Sweeps states [begin, end) of the Gray-code sequence into `hist`.
void sweep_segment(const Graph& g, std::uint64_t begin, std::uint64_t end,
                   std::map<std::size_t, Natural>& hist) {
    const std::size_t n = g.n;
    BitVector eps(n);
    std::uint64_t start_code = gray(begin);
    for (std::size_t i = 0; i < n; ++i)
        if ((start_code >> i) & 1u) eps.set(i, true);

    SymMatrix m = graph_matrix(g, eps);
    KernelBasis kb = kernel_basis(m);
    std::size_t nul = kb.dim();
    hist[n - nul] += 1;

    for (std::uint64_t t = begin + 1; t < end; ++t) {
        std::size_t v = std::size_t(std::countr_zero(t));
        ToggleStep step = apply_toggle(m, kb, BitVector::unit(n, v));
        if (step.delta_nullity < -1 || step.delta_nullity > 1)
            throw std::logic_error("diagonal_sweep: |delta rank| > 1");
        m = std::move(step.matrix);
        kb = std::move(step.kernel);
        nul = std::size_t(std::ptrdiff_t(nul) + step.delta_nullity);
        hist[n - nul] += 1;
    }
}

} // namespace

RankHistogram diagonal_sweep(const Graph& g, std::size_t max_n, unsigned threads) {
    if (g.n > max_n) throw std::invalid_argument("diagonal_sweep: vertex count exceeds budget");
    if (threads == 0) threads = 1;

    const std::uint64_t total = std::uint64_t(1) << g.n;
    if (std::uint64_t(threads) > total) threads = unsigned(total);

    std::vector<std::map<std::size_t, Natural>> parts(threads);
    if (threads == 1) {
        sweep_segment(g, 0, total, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            std::uint64_t begin = total / threads * w + std::min<std::uint64_t>(w, total % threads);
            std::uint64_t len = total / threads + (w < total % threads ? 1 : 0);
            pool.emplace_back(sweep_segment, std::cref(g), begin, begin + len, std::ref(parts[w]));
        }
        for (auto& th : pool) th.join();
    }

    RankHistogram out;
    for (const auto& part : parts)
        for (const auto& [r, c] : part) out.counts[r] += c;
    return out;
}

} // namespace gf2od
