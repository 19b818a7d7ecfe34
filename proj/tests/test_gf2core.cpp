#include <doctest.h>

#include "gf2od/gf2core.hpp"
#include "oracle.hpp"

using namespace gf2od;

TEST_CASE("dot") {
    CHECK(dot(BitVector::from_bits({0, 0, 0}), BitVector::from_bits({1, 1, 1})) == 0);
    CHECK(dot(BitVector::from_bits({1, 1}), BitVector::from_bits({1, 1})) == 0);
    CHECK(dot(BitVector::from_bits({1, 0, 1}), BitVector::from_bits({1, 1, 1})) == 0);
    CHECK(dot(BitVector::from_bits({1, 0, 1}), BitVector::from_bits({1, 1, 0})) == 1);
    CHECK_THROWS_AS(dot(BitVector(2), BitVector(3)), std::invalid_argument);
}

TEST_CASE("dot of a vector with itself is popcount parity") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        BitVector a = oracle::random_vector(1 + rng() % 150, rng);
        CHECK(dot(a, a) == int(a.popcount() & 1u));
    }
}

TEST_CASE("mat_vec") {
    CHECK(mat_vec(SymMatrix::identity(3), BitVector::from_bits({1, 0, 1})) ==
          BitVector::from_bits({1, 0, 1}));
    CHECK(mat_vec(SymMatrix::zero(4), BitVector::from_bits({1, 1, 0, 1})) == BitVector(4));
    CHECK(mat_vec(SymMatrix::from_rows({{0, 1}, {1, 0}}), BitVector::from_bits({1, 0})) ==
          BitVector::from_bits({0, 1}));
    CHECK_THROWS_AS(mat_vec(SymMatrix::identity(2), BitVector(3)), std::invalid_argument);
}

TEST_CASE("symmetry validated at construction") {
    std::vector<BitVector> rows{BitVector::from_bits({0, 1}), BitVector::from_bits({0, 0})};
    CHECK_THROWS_AS(SymMatrix(std::move(rows)), std::invalid_argument);
}

TEST_CASE("rank") {
    CHECK(rank(SymMatrix::zero(3)) == 0);
    CHECK(rank(SymMatrix::identity(5)) == 5);
    CHECK(rank(SymMatrix::from_rows({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(SymMatrix::identity(3)).dim() == 0);
    CHECK(kernel_basis(SymMatrix::zero(2)).dim() == 2);
    auto kb = kernel_basis(SymMatrix::from_rows({{1, 1}, {1, 1}}));
    REQUIRE(kb.dim() == 1);
    CHECK(kb.vectors[0] == BitVector::from_bits({1, 1}));
}

TEST_CASE("solve") {
    auto x = solve(SymMatrix::identity(3), BitVector::from_bits({1, 1, 0}));
    REQUIRE(x);
    CHECK(*x == BitVector::from_bits({1, 1, 0}));

    CHECK(!solve(SymMatrix::zero(2), BitVector::from_bits({1, 0})));

    // canonical particular solution: free variables zero
    auto y = solve(SymMatrix::from_rows({{1, 1}, {1, 1}}), BitVector::from_bits({1, 1}));
    REQUIRE(y);
    CHECK(*y == BitVector::from_bits({1, 0}));

    CHECK_THROWS_AS(solve(SymMatrix::identity(2), BitVector(3)), std::invalid_argument);
}

TEST_CASE("image_contains") {
    CHECK(image_contains(SymMatrix::zero(2), BitVector(2)));
    CHECK(!image_contains(SymMatrix::zero(2), BitVector::from_bits({1, 0})));
    CHECK(!image_contains(SymMatrix::from_rows({{1, 1}, {1, 1}}), BitVector::from_bits({1, 0})));
    CHECK(image_contains(SymMatrix::from_rows({{1, 1}, {1, 1}}), BitVector::from_bits({1, 1})));
}

TEST_CASE("add_outer") {
    CHECK(add_outer(SymMatrix::zero(2), BitVector::from_bits({1, 1})) ==
          SymMatrix::from_rows({{1, 1}, {1, 1}}));
    auto m = SymMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(add_outer(m, BitVector(2)) == m);
    CHECK(add_outer(m, BitVector::from_bits({1, 1})) == SymMatrix::identity(2));
}

TEST_CASE("n = 0 is legal everywhere") {
    SymMatrix m = SymMatrix::zero(0);
    CHECK(rank(m) == 0);
    CHECK(kernel_basis(m).dim() == 0);
    auto x = solve(m, BitVector(0));
    REQUIRE(x);
    CHECK(x->size() == 0);
}

TEST_CASE("rank-nullity over random matrices") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = rng() % 65;
        SymMatrix m = oracle::random_symmetric(n, rng);
        CHECK(rank(m) + kernel_basis(m).dim() == n);
        for (const auto& v : kernel_basis(m).vectors)
            CHECK(mat_vec(m, v).is_zero());
    }
}

TEST_CASE("solve agrees with exhaustive search") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 10;
        SymMatrix m = oracle::random_symmetric(n, rng);
        BitVector b = oracle::random_vector(n, rng);
        auto sols = oracle::brute_solutions(oracle::to_grid(m), oracle::to_ints(b));
        auto x = solve(m, b);
        if (x) {
            CHECK(mat_vec(m, *x) == b);
            CHECK(!sols.empty());
        } else {
            CHECK(sols.empty());
        }
        CHECK(image_contains(m, b) == !sols.empty());
    }
}

TEST_CASE("rank agrees with row-span oracle") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 8;
        SymMatrix m = oracle::random_symmetric(n, rng);
        CHECK(rank(m) == oracle::brute_rank(oracle::to_grid(m)));
    }
}

TEST_CASE("add_outer is an involution") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 40;
        SymMatrix m = oracle::random_symmetric(n, rng);
        BitVector u = oracle::random_vector(n, rng);
        CHECK(add_outer(add_outer(m, u), u) == m);
    }
}

TEST_CASE("echelonize is deterministic and records its transform") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 20;
        SymMatrix m = oracle::random_symmetric(n, rng);
        EchelonForm a = echelonize(m);
        EchelonForm b = echelonize(m);
        CHECK(a.rows == b.rows);
        CHECK(a.transform == b.transform);
        CHECK(a.pivot_cols == b.pivot_cols);
        // transform * input = echelon rows
        Matrix t{n, n, a.transform};
        CHECK(mat_mul(t, m.to_matrix()).rows == a.rows);
    }
}
