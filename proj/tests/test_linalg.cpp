#include <bit>
#include <random>

#include "doctest.h"
#include "mcrit/linalg.hpp"
#include "oracles.hpp"

using namespace mcrit;

TEST_CASE("mat_mul examples") {
    std::mt19937_64 rng(1);
    const auto a = oracle::random_matrix(9, 7, 0.3, rng);
    CHECK(mat_mul(SparseBitMatrix::identity(9), a) == a);
    CHECK(mat_mul(a, SparseBitMatrix::identity(7)) == a);

    const SparseBitMatrix u(2, std::vector<Column>{{0}, {0, 1}});
    CHECK(mat_mul(u, u) == SparseBitMatrix(2, std::vector<Column>{{0}, {1}}));

    CHECK_THROWS_AS(mat_mul(a, a), std::invalid_argument);
}

TEST_CASE("mat_mul agrees with dense multiplication") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 60; ++it) {
        const std::size_t n = 1 + rng() % 64, k = 1 + rng() % 64, p = 1 + rng() % 64;
        const double density = 0.02 + 0.3 * (rng() % 100) / 100.0;
        const auto a = oracle::random_matrix(n, k, density, rng);
        const auto b = oracle::random_matrix(k, p, density, rng);
        CHECK(oracle::to_dense(mat_mul(a, b)) == oracle::multiply(oracle::to_dense(a), oracle::to_dense(b), k));
    }
}

TEST_CASE("mat_mul is associative") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 40; ++it) {
        const auto a = oracle::random_matrix(12, 10, 0.3, rng);
        const auto b = oracle::random_matrix(10, 14, 0.3, rng);
        const auto c = oracle::random_matrix(14, 9, 0.3, rng);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
}

TEST_CASE("mat_add") {
    std::mt19937_64 rng(4);
    const auto a = oracle::random_matrix(8, 8, 0.4, rng);
    CHECK(mat_add(a, a).is_zero());
    CHECK(mat_add(a, SparseBitMatrix(8, 8)) == a);
    CHECK(column_xor(Column{1, 3}, Column{3, 5}) == Column{1, 5});
    CHECK_THROWS_AS(mat_add(a, SparseBitMatrix(8, 7)), std::invalid_argument);
}

TEST_CASE("rank") {
    CHECK(rank(SparseBitMatrix(5, 4)) == 0);
    CHECK(rank(SparseBitMatrix::identity(6)) == 6);
    // edges {0,1},{1,2},{0,2} over three vertices
    const SparseBitMatrix triangle(3, std::vector<Column>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(rank(triangle) == oracle::rank(oracle::to_dense(triangle)));
    CHECK(rank(triangle) == 2);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 80; ++it) {
        const std::size_t n = 1 + rng() % 40, m = 1 + rng() % 40;
        const auto a = oracle::random_matrix(n, m, 0.15, rng);
        CHECK(rank(a) == oracle::rank(oracle::to_dense(a)));
    }
}

TEST_CASE("rank plus nullity is the column count") {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 40; ++it) {
        const std::size_t n = 1 + rng() % 12, m = 1 + rng() % 12;
        const auto a = oracle::random_matrix(n, m, 0.3, rng);
        // count kernel vectors by enumerating every subset of columns
        std::size_t kernel = 0;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<std::uint8_t> sum(n, 0);
            for (std::size_t j = 0; j < m; ++j)
                if (mask >> j & 1)
                    for (auto r : a.column(j)) sum[r] ^= 1;
            kernel += std::all_of(sum.begin(), sum.end(), [](auto v) { return v == 0; });
        }
        const std::size_t nullity = static_cast<std::size_t>(std::countr_zero(kernel));
        CHECK((std::size_t{1} << nullity) == kernel);
        CHECK(rank(a) + nullity == m);
    }
}

TEST_CASE("matrix construction checks columns") {
    CHECK_THROWS_AS(SparseBitMatrix(3, std::vector<Column>{{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SparseBitMatrix(3, std::vector<Column>{{3}}), std::invalid_argument);
    SparseBitMatrix m(3, 0);
    CHECK_THROWS_AS(m.append_column({1, 1}), std::invalid_argument);
}

TEST_CASE("block assembly") {
    const SparseBitMatrix a(2, std::vector<Column>{{0}, {1}});
    const SparseBitMatrix b(1, std::vector<Column>{{0}, {}});
    BlockMatrix bm({2, 1}, {2});
    bm.set(0, 0, a);
    bm.set(1, 0, b);
    CHECK(bm.build() == SparseBitMatrix(3, std::vector<Column>{{0, 2}, {1}}));
    CHECK_THROWS_AS(bm.set(1, 0, a), std::invalid_argument);
}
