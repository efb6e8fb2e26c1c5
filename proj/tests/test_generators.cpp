#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mcrit/generators.hpp"

using namespace mcrit;

namespace {

Bigrade g(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

std::size_t candidates_below(const Support& s, const Bigrade& x) {
    std::size_t n = 0;
    for (const auto& y : s.generators()) n += leq(y, x);
    return n;
}

}  // namespace

TEST_CASE("wheel") {
    for (std::size_t l : {4, 8, 16}) {
        const auto w = gen_wheel(l);
        CHECK(validate(w).ok());
        CHECK(w.cells(0).size() == l + 1);
        CHECK(w.cells(1).size() == 2 * l);
        CHECK(w.cells(2).size() == l);
        CHECK(w.criticality() == l);
        const Cell& center = w.cell(0, l);
        CHECK(center.support[0] == g(0, 2 * l - 2));
        CHECK(center.support[l - 1] == g(2 * l - 2, 0));
        // every spoke generator has exactly one center generator below it
        for (std::size_t i = 0; i < l; ++i) {
            const Cell& spoke = w.cell(1, l + i);
            CHECK(spoke.facets == std::vector<std::size_t>{i, l});
            CHECK(candidates_below(center.support, spoke.support[0]) == 1);
        }
    }
    CHECK_THROWS_AS(gen_wheel(5), std::invalid_argument);
    CHECK_THROWS_AS(gen_wheel(2), std::invalid_argument);
}

TEST_CASE("star") {
    const auto s = gen_star(8);
    CHECK(validate(s).ok());
    CHECK(s.cells(1).size() == 8);
    CHECK(s.dimension_count() == 2);
    for (const Cell& e : s.cells(1)) {
        REQUIRE(e.support.size() == 2);
        CHECK(join(e.support[0], e.support[1]) == g(14, 14));
        for (const auto& x : e.support.generators()) CHECK(candidates_below(s.cell(0, 8).support, x) == 1);
    }
    CHECK(validate(gen_star(2)).ok());
    CHECK_THROWS_AS(gen_star(1), std::invalid_argument);
}

TEST_CASE("modified wheel") {
    for (std::size_t l : {4, 8, 32}) {
        const auto w = gen_modified_wheel(l);
        const auto plain = gen_wheel(l);
        CHECK(validate(w).ok());
        const auto edges = w.cells(1);
        REQUIRE(edges.size() == 2 * l);
        for (std::size_t a = 0; a < edges.size(); ++a)
            for (std::size_t b = a + 1; b < edges.size(); ++b)
                CHECK_FALSE(comparable(edges[a].support[0], edges[b].support[0]));
        const auto tris = w.cells(2);
        for (std::size_t a = 0; a < tris.size(); ++a)
            for (std::size_t b = a + 1; b < tris.size(); ++b)
                CHECK_FALSE(comparable(tris[a].support[0], tris[b].support[0]));
        // edges strictly after the vertex generators they sit over
        for (const Cell& e : edges)
            for (std::size_t v : e.facets)
                for (const auto& x : w.cell(0, v).support.generators())
                    if (leq(x, e.support[0])) CHECK_FALSE(x == e.support[0]);
        // pairs that were incomparable stay incomparable, and the single-generator forcing survives
        for (std::size_t d = 0; d < 3; ++d)
            for (std::size_t i = 0; i < w.cells(d).size(); ++i)
                for (std::size_t e = 0; e < 3; ++e)
                    for (std::size_t j = 0; j < w.cells(e).size(); ++j)
                        for (std::size_t p = 0; p < w.cell(d, i).support.size(); ++p)
                            for (std::size_t q = 0; q < w.cell(e, j).support.size(); ++q)
                                if (!comparable(plain.cell(d, i).support[p], plain.cell(e, j).support[q]))
                                    CHECK_FALSE(comparable(w.cell(d, i).support[p], w.cell(e, j).support[q]));
        for (std::size_t i = 0; i < l; ++i)
            CHECK(candidates_below(w.cell(0, l).support, w.cell(1, l + i).support[0]) == 1);
    }
}

TEST_CASE("bifunction staircases") {
    ComplexBuilder vb;
    vb.add_cell(0, {{Rational(1), Rational(1)}});
    vb.add_cell(0, {{Rational(0), Rational(0)}});
    vb.add_cell(1, {{Rational(2), Rational(3)}}, {0, 1});
    const auto values = std::move(vb).build();

    const auto two = gen_bifunction(values, 2);
    CHECK(validate(two).ok());
    REQUIRE(two.cell(0, 0).support.size() == 2);
    CHECK(two.cell(0, 0).support[0] == g(0, 1));
    CHECK(two.cell(0, 0).support[1] == g(1, 0));
    REQUIRE(two.cell(0, 1).support.size() == 1);
    CHECK(two.cell(0, 1).support[0] == g(0, 0));

    const auto four = gen_bifunction(values, 4);
    CHECK(validate(four).ok());
    const Support& s = four.cell(0, 0).support;
    REQUIRE(s.size() == 4);
    CHECK(s[0] == g(0, 1));
    CHECK(s[3] == g(1, 0));
    for (int j = 1; j <= 2; ++j) {
        const double t = 1.0 / (1.0 + std::tan(j * std::numbers::pi / 6));
        // steeper rays meet the segment further left
        const Bigrade& p = s[3 - j];
        CHECK(std::abs(p.x.to_double() - t) < 1e-9);
        CHECK(std::abs(p.y.to_double() - (1 - t)) < 1e-9);
        CHECK(p.x.den() <= (1LL << 32));
    }
    for (const auto& c : four.cells(1)) CHECK(c.support.size() <= 4);

    ComplexBuilder bad;
    bad.add_cell(0, {{Rational(5), Rational(0)}});
    bad.add_cell(1, {{Rational(1), Rational(0)}}, {0});
    CHECK_THROWS_AS(gen_bifunction(std::move(bad).build(), 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_bifunction(values, 1), std::invalid_argument);
}

TEST_CASE("bifunction on a grid is monotone") {
    const auto values = bifunction_grid(6, 3);
    CHECK(validate(values).ok());
    for (std::size_t k : {2, 4, 8}) {
        const auto c = gen_bifunction(values, k);
        CHECK(validate(c).ok());
        CHECK(c.criticality() <= k);
        for (std::size_t d = 1; d < c.dimension_count(); ++d)
            for (const Cell& cell : c.cells(d))
                for (std::size_t f : cell.facets)
                    for (const auto& x : cell.support.generators()) CHECK(c.cell(d - 1, f).support.contains(x));
    }
}

TEST_CASE("degree-Rips") {
    const double h = std::sqrt(3.0) / 2;
    const auto c = gen_degree_rips({{0, 0}, {1, 0}, {0.5, h}}, 2);
    CHECK(validate(c).ok());
    for (const Cell& v : c.cells(0)) {
        REQUIRE(v.support.size() == 2);
        CHECK(v.support[0] == g(0, 2));
        CHECK(v.support[1].y == Rational(0));
        CHECK(std::abs(v.support[1].x.to_double() - 1.0) < 1e-9);
    }
    for (const Cell& e : c.cells(1)) {
        REQUIRE(e.support.size() == 1);
        CHECK(e.support[0].y == Rational(0));
    }

    const auto pts = random_points(12, 2, 5);
    const auto r = gen_degree_rips(pts, 3);
    CHECK(validate(r).ok());
    CHECK(r.criticality() <= 12 * 11 / 2 + 1);
    CHECK(r.cells(3).size() == 495);
    CHECK_THROWS_AS(gen_degree_rips({{0.0}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_degree_rips(pts, 4), std::invalid_argument);
}

TEST_CASE("random complexes") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto c = gen_random(120, 8, 3, seed);
        CHECK(validate(c).ok());
        CHECK(c.cell_count() <= 120);
        CHECK(c.criticality() <= 8);
        CHECK(c == gen_random(120, 8, 3, seed));
    }
    const auto free = gen_random(100, 1, 2, 4);
    CHECK(free.criticality() == 1);
    CHECK(gen_random(0, 3, 2, 1).cell_count() == 0);
}
