#include <random>

#include "doctest.h"
#include "mcrit/core.hpp"
#include "oracles.hpp"

using namespace mcrit;

namespace {

Bigrade g(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

std::vector<Bigrade> random_grades(std::mt19937_64& rng, std::size_t n, int range) {
    std::uniform_int_distribution<int> coord(0, range);
    std::vector<Bigrade> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(g(coord(rng), coord(rng)));
    return out;
}

}  // namespace

TEST_CASE("join is the componentwise maximum") {
    CHECK(join(g(1, 5), g(3, 2)) == g(3, 5));
    CHECK(join(g(0, 0), g(2, 3)) == g(2, 3));
    CHECK(join(g(4, 1), g(4, 1)) == g(4, 1));

    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto v = random_grades(rng, 3, 20);
        CHECK(join(v[0], join(v[1], v[2])) == join(join(v[0], v[1]), v[2]));
        CHECK(join(v[0], v[1]) == join(v[1], v[0]));
        CHECK(leq(v[0], join(v[0], v[1])));
        CHECK(leq(v[1], join(v[0], v[1])));
    }
}

TEST_CASE("normalize_support examples") {
    const auto s = Support::normalize({g(2, 3), g(1, 5), g(2, 4)});
    CHECK(std::vector<Bigrade>(s.generators().begin(), s.generators().end()) == std::vector<Bigrade>{g(1, 5), g(2, 3)});
    CHECK(Support::normalize({g(3, 1)}).size() == 1);
    const auto chain = Support::normalize({g(1, 1), g(2, 2)});
    REQUIRE(chain.size() == 1);
    CHECK(chain[0] == g(1, 1));
    CHECK_THROWS_AS(Support::normalize({}), EmptySupportError);
}

TEST_CASE("normalize_support is idempotent and keeps the upset") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        const auto grades = random_grades(rng, 1 + rng() % 12, 10);
        const Support s = Support::normalize(grades);
        CHECK(s.is_antichain());
        const std::vector<Bigrade> gens(s.generators().begin(), s.generators().end());
        CHECK(Support::normalize(gens) == s);
        for (int x = -1; x <= 11; ++x)
            for (int y = -1; y <= 11; ++y) {
                const Bigrade p = g(x, y);
                CHECK(s.contains(p) == oracle::in_upset(grades, p));
            }
    }
}

TEST_CASE("leftmost_below picks the smallest x among generators below") {
    const Support s = Support::normalize({g(0, 6), g(2, 3), g(5, 1)});
    CHECK(s.leftmost_below(g(4, 4)) == std::optional<std::size_t>(1));
    const Support t = Support::normalize({g(1, 4), g(2, 2)});
    CHECK(t.leftmost_below(g(3, 5)) == std::optional<std::size_t>(0));
    CHECK_FALSE(t.leftmost_below(g(0, 9)).has_value());

    std::mt19937_64 rng(5);
    for (int it = 0; it < 300; ++it) {
        const Support r = Support::normalize(random_grades(rng, 1 + rng() % 8, 12));
        const Bigrade p = random_grades(rng, 1, 14)[0];
        std::optional<std::size_t> expect;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (leq(r[i], p) && (!expect || r[i].x < r[*expect].x)) expect = i;
        CHECK(r.leftmost_below(p) == expect);
    }
}

TEST_CASE("validate") {
    {
        ComplexBuilder b;
        b.add_cell(0, {g(0, 0)});
        b.add_cell(0, {g(1, 0)});
        b.add_cell(1, {g(1, 1)}, {0, 1});
        CHECK(validate(std::move(b).build()).ok());
    }
    {
        ComplexBuilder b;
        b.add_cell(0, {g(0, 0)});
        b.add_cell(0, {g(1, 0)});
        b.add_cell(1, {g(0, 0)}, {0, 1});
        const auto report = validate(std::move(b).build());
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].kind == ViolationKind::face_support);
        CHECK(report.violations[0].cell == 0);
    }
    {
        ComplexBuilder b;
        b.add_cell(0, {g(0, 0)});
        b.add_cell(1, {g(0, 0)}, {3});
        CHECK(validate(std::move(b).build()).violations.at(0).kind == ViolationKind::bad_index);
    }
    {
        // boundary of a triangle missing one edge's vertex cancellation
        ComplexBuilder b;
        for (int i = 0; i < 3; ++i) b.add_cell(0, {g(0, 0)});
        b.add_cell(1, {g(0, 0)}, {0, 1});
        b.add_cell(1, {g(0, 0)}, {1, 2});
        b.add_cell(1, {g(0, 0)}, {0, 1});
        b.add_cell(2, {g(0, 0)}, {0, 1, 2});
        CHECK(validate(std::move(b).build()).violations.at(0).kind == ViolationKind::boundary_squared);
    }
    {
        std::vector<std::vector<Cell>> blocks(1);
        blocks[0].push_back(Cell{0, 0, Support::unchecked({g(0, 0), g(1, 1)}), {}});
        CHECK(validate(MultiCriticalComplex(blocks)).violations.at(0).kind == ViolationKind::non_antichain_support);
    }
}

TEST_CASE("complex accessors") {
    ComplexBuilder b;
    b.add_cell(0, {g(0, 0)});
    b.add_cell(0, {g(0, 1), g(1, 0)});
    b.add_cell(1, {g(2, 3), g(3, 2), g(1, 4)}, {0, 1});
    const auto c = std::move(b).build();
    CHECK(c.dimension_count() == 2);
    CHECK(c.cell_count() == 3);
    CHECK(c.criticality() == 3);
    CHECK(c.size() == 6);
    CHECK(c.cells(5).empty());
}
