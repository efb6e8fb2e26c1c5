#include <stdexcept>

#include "doctest.h"
#include "mcrit/rational.hpp"

using mcrit::Rational;

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-2.50") == Rational(-5, 2));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-1/3") == Rational(-1, 3));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("5.") == Rational(5));

    for (const char* bad : {"", "abc", "1/0", ".", "1e5", "1.2.3", "1/-2", "--1", "0x10", "nan", "1/2/3"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("rational printing is exact and round-trips") {
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-5, 2).to_string() == "-2.5");
    CHECK(Rational(1, 8).to_string() == "0.125");
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(-7, 40).to_string() == "-0.175");
    CHECK(Rational(1, 37).to_string() == "1/37");
    for (auto r : {Rational(1, 3), Rational(-22, 7), Rational(3, 1024), Rational(1, 1LL << 32), Rational(0)})
        CHECK(Rational::parse(r.to_string()) == r);
}

TEST_CASE("rational ordering and arithmetic") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("snapping to a power-of-two denominator") {
    CHECK(Rational::snap(0.5) == Rational(1, 2));
    CHECK(Rational::snap(1.0) == Rational(1));
    const Rational third = Rational::snap(1.0 / 3.0);
    CHECK(third.den() == (1LL << 32));
    CHECK(std::abs(third.to_double() - 1.0 / 3.0) < 1e-9);
    CHECK_THROWS(Rational::snap(1.0 / 0.0));
}
