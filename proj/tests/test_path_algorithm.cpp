#include "doctest.h"
#include "mcrit/generators.hpp"
#include "mcrit/path_algorithm.hpp"
#include "oracles.hpp"

using namespace mcrit;

namespace {

Bigrade g(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

std::size_t max_column(const SparseBitMatrix& m) {
    std::size_t n = 0;
    for (const auto& c : m.columns()) n = std::max(n, c.size());
    return n;
}

}  // namespace

TEST_CASE("generators and relations of a path resolution") {
    ComplexBuilder b;
    b.add_cell(0, {g(1, 5), g(3, 2)});
    b.add_cell(0, {g(0, 0)});
    const auto rows = build_generators_relations(std::move(b).build());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].generator_count() == 3);
    REQUIRE(rows[0].relation_count() == 1);
    CHECK(rows[0].relation_grades()[0] == g(3, 5));
    CHECK(rows[0].p1().column(0) == Column{0, 1});
    CHECK(rows[0].syzygy_count() == 0);

    const auto wheel_rows = build_generators_relations(gen_wheel(8));
    CHECK(wheel_rows[0].support_size(8) == 8);
    CHECK(wheel_rows[0].relation_count() == 7);
    CHECK(wheel_rows[0].relation_offset(8) == 0);
}

TEST_CASE("lifts take the facet generator with the smallest x below") {
    ComplexBuilder b;
    b.add_cell(0, {g(0, 6), g(2, 3), g(5, 1)});
    b.add_cell(0, {g(1, 4), g(2, 2)});
    b.add_cell(1, {g(4, 4)}, {0, 1});
    b.add_cell(1, {g(3, 5)}, {0, 1});
    const auto c = std::move(b).build();
    const auto rows = build_generators_relations(c);
    const auto lifts = compute_generator_lifts(c, rows);
    // vertex 0 owns rows 0..2, vertex 1 rows 3..4
    CHECK(lifts[1].column(0) == Column{1, 3});
    // (0,6) is not below (3,5); on vertex 1 both qualify and (1,4) wins over (2,2)
    CHECK(lifts[1].column(1) == Column{1, 3});
    CHECK(lifts[0].rows() == 0);

    ComplexBuilder bad;
    bad.add_cell(0, {g(1, 1)});
    bad.add_cell(0, {g(0, 0)});
    bad.add_cell(1, {g(0, 0)}, {0, 1});
    const auto invalid = std::move(bad).build();
    CHECK_THROWS_AS(compute_generator_lifts(invalid, build_generators_relations(invalid)), InvalidBifiltrationError);
}

TEST_CASE("connect_path") {
    CHECK(connect_path(2, 5) == std::vector<std::size_t>{2, 3, 4});
    CHECK(connect_path(5, 2) == std::vector<std::size_t>{2, 3, 4});
    CHECK(connect_path(3, 3).empty());
    CHECK(connect_path(0, 7).size() == 7);
}

TEST_CASE("an odd group in a product column is an internal error") {
    ComplexBuilder b;
    b.add_cell(0, {g(0, 1), g(1, 0)});
    const auto rows = build_generators_relations(std::move(b).build());
    const SparseBitMatrix odd(2, std::vector<Column>{{0}});
    CHECK_THROWS_AS(connect_pairs(rows[0], odd), std::logic_error);
    const SparseBitMatrix even(2, std::vector<Column>{{0, 1}});
    CHECK(connect_pairs(rows[0], even).column(0) == Column{0});
}

TEST_CASE("wheel forces dense corrections") {
    for (std::size_t l : {4, 8, 16, 64}) {
        const auto r = resolve_path(gen_wheel(l));
        const auto& h0 = r.maps.homotopy0.at(2);
        REQUIRE(h0.cols() == l);
        for (const auto& col : h0.columns()) CHECK(col.size() == l - 1);
        for (const auto& col : r.maps.lift0.at(2).columns()) CHECK(col.size() == 3);
        CHECK(r.complex.boundary(2).cols() == l);
        CHECK(r.complex.boundary(2).nnz() == l * (3 + (l - 1)));
    }
    CHECK(resolve_path(gen_wheel(8)).complex.boundary(2).nnz() == 80);
}

TEST_CASE("star forces a dense first lift") {
    for (std::size_t l : {2, 8, 64}) {
        const auto r = resolve_path(gen_star(l));
        const auto& f1 = r.maps.lift1.at(1);
        REQUIRE(f1.cols() == l);
        for (const auto& col : f1.columns()) CHECK(col.size() == l - 1);
        CHECK(f1.nnz() == l * (l - 1));
    }
}

TEST_CASE("free input passes through unchanged") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = gen_random(80, 1, 3, seed);
        const auto r = resolve_path(c);
        CHECK(r.complex == as_free_complex(c));
        CHECK(r.maps.lift1.at(0).is_zero());
        for (const auto& m : r.maps.lift1) CHECK(m.is_zero());
        for (const auto& m : r.maps.homotopy0) CHECK(m.is_zero());
    }
}

TEST_CASE("path output is a graded complex with the input's pointwise homology") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto c = gen_random(40, 4, 3, seed, 6);
        const auto r = resolve_path(c);
        CHECK(commutation_failures(r.maps).empty());
        CHECK(oracle::is_graded_complex(r.complex));
        CHECK(oracle::same_pointwise_homology(c, r.complex));
    }
    for (const auto& c : {gen_wheel(6), gen_star(5), gen_modified_wheel(6)}) {
        const auto r = resolve_path(c);
        CHECK(commutation_failures(r.maps).empty());
        CHECK(oracle::is_graded_complex(r.complex));
        CHECK(oracle::same_pointwise_homology(c, r.complex));
    }
}

TEST_CASE("modified wheel path output has quadratically many entries") {
    const auto small = resolve_path(gen_modified_wheel(16)).complex.boundary(2).nnz();
    const auto large = resolve_path(gen_modified_wheel(64)).complex.boundary(2).nnz();
    CHECK(small == 16 * (3 + 15));
    CHECK(large == 64 * (3 + 63));
    CHECK(max_column(resolve_path(gen_modified_wheel(64)).maps.homotopy0.at(2)) == 63);
}
