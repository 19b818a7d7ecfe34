#include <doctest.h>

#include "gf2od/parity.hpp"
#include "oracle.hpp"

using namespace gf2od;

TEST_CASE("diag_vector") {
    CHECK(diag_vector(SymMatrix::identity(3)) == BitVector::from_bits({1, 1, 1}));
    CHECK(diag_vector(SymMatrix::zero(2)) == BitVector(2));
    CHECK(diag_vector(SymMatrix::from_rows({{1, 1}, {1, 0}})) == BitVector::from_bits({1, 0}));
}

TEST_CASE("solve_diag_system") {
    auto s1 = solve_diag_system(SymMatrix::identity(3));
    CHECK(s1.particular == BitVector::from_bits({1, 1, 1}));
    CHECK(s1.dim() == 0);

    auto s2 = solve_diag_system(SymMatrix::zero(2));
    CHECK(s2.particular == BitVector(2));
    CHECK(s2.dim() == 2);

    auto s3 = solve_diag_system(SymMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK(s3.particular == BitVector::from_bits({1, 0}));
    REQUIRE(s3.dim() == 1);
    CHECK(s3.kernel.vectors[0] == BitVector::from_bits({1, 1}));
}

TEST_CASE("parity_of_solutions") {
    CHECK(parity_of_solutions(SymMatrix::identity(3)) == 1);
    CHECK(parity_of_solutions(SymMatrix::zero(4)) == 0);
    SymMatrix m = SymMatrix::from_rows({{1, 1}, {1, 1}});
    CHECK(parity_of_solutions(m) == 1);
    // both solutions hit the invariant
    CHECK(dot(diag_vector(m), BitVector::from_bits({1, 0})) == 1);
    CHECK(dot(diag_vector(m), BitVector::from_bits({0, 1})) == 1);
}

TEST_CASE("existence, exhaustive for n <= 4") {
    for (std::size_t n = 0; n <= 4; ++n) {
        std::uint64_t combos = std::uint64_t(1) << (n * (n + 1) / 2);
        for (std::uint64_t code = 0; code < combos; ++code) {
            SymMatrix m = oracle::symmetric_from_code(n, code);
            auto s = solve_diag_system(m);
            CHECK(mat_vec(m, s.particular) == diag_vector(m));
        }
    }
}

TEST_CASE("parity holds on every enumerated solution") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 1 + rng() % 16;
        SymMatrix m = oracle::random_symmetric(n, rng);
        auto s = solve_diag_system(m);
        int parity = parity_of_solutions(m);
        REQUIRE(s.dim() <= 16);
        std::uint64_t limit = std::min<std::uint64_t>(std::uint64_t(1) << s.dim(), 1u << 12);
        for (std::uint64_t idx = 0; idx < limit; ++idx)
            CHECK(dot(diag_vector(m), s.element(idx)) == parity);
    }
}

TEST_CASE("b^T x is constant on the solution set of Mx = b") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 20;
        SymMatrix m = oracle::random_symmetric(n, rng);
        // draw b from the image: b = M w
        BitVector b = mat_vec(m, oracle::random_vector(n, rng));
        auto x0 = solve(m, b);
        REQUIRE(x0);
        int value = dot(b, *x0);
        auto kb = kernel_basis(m);
        for (int probe = 0; probe < 20; ++probe) {
            BitVector x = *x0;
            for (const auto& z : kb.vectors)
                if (rng() & 1u) x ^= z;
            CHECK(dot(b, x) == value);
        }
    }
}

namespace {

// checks P^T M P against units-then-hyperbolic-then-zero block layout
void check_normal_form(const SymMatrix& m) {
    NormalForm nf = symmetric_normal_form(m);
    const std::size_t n = m.dim();
    CHECK(rank(nf.transform) == n);
    std::size_t a = nf.unit_count, b = nf.hyperbolic_count;
    CHECK(a + 2 * b <= n);
    CHECK(a + 2 * b == rank(m));
    CHECK((a & 1u) == (rank(m) & 1u));

    Matrix pt = nf.transform.transpose();
    Matrix res = mat_mul(mat_mul(pt, m.to_matrix()), nf.transform);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool expect = false;
            if (i < a) expect = (i == j);
            else if (i < a + 2 * b && j < a + 2 * b) {
                std::size_t bi = (i - a) / 2, bj = (j - a) / 2;
                expect = (bi == bj) && (i != j);
            }
            CHECK(res.get(i, j) == expect);
        }
}

} // namespace

TEST_CASE("symmetric_normal_form on fixed matrices") {
    auto nf1 = symmetric_normal_form(SymMatrix::identity(2));
    CHECK(nf1.unit_count == 2);
    CHECK(nf1.hyperbolic_count == 0);

    auto nf2 = symmetric_normal_form(SymMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(nf2.unit_count == 0);
    CHECK(nf2.hyperbolic_count == 1);

    auto nf3 = symmetric_normal_form(SymMatrix::zero(3));
    CHECK(nf3.unit_count == 0);
    CHECK(nf3.hyperbolic_count == 0);

    check_normal_form(SymMatrix::identity(2));
    check_normal_form(SymMatrix::from_rows({{0, 1}, {1, 0}}));
    check_normal_form(SymMatrix::zero(3));
}

TEST_CASE("symmetric_normal_form randomized") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 80; ++trial)
        check_normal_form(oracle::random_symmetric(1 + rng() % 32, rng));
}

TEST_CASE("inverse_parity_identity") {
    CHECK(inverse_parity_identity(SymMatrix::identity(3)));
    CHECK(inverse_parity_identity(SymMatrix::from_rows({{0, 1}, {1, 0}})));
    CHECK(inverse_parity_identity(SymMatrix::from_rows({{1, 1}, {1, 0}})));
    CHECK_THROWS_AS(inverse_parity_identity(SymMatrix::zero(2)), std::domain_error);

    std::mt19937_64 rng(13);
    int seen = 0;
    while (seen < 40) {
        std::size_t n = 1 + rng() % 24;
        SymMatrix m = oracle::random_symmetric(n, rng);
        if (rank(m) != n) continue;
        CHECK(inverse_parity_identity(m));
        ++seen;
    }
}
