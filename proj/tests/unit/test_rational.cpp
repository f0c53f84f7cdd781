#include <doctest.h>

#include "nnequiv/error.hpp"
#include "nnequiv/rational.hpp"

using nnequiv::Rational;

TEST_CASE("decimal parsing is exact") {
    CHECK(Rational::parse("0.1") == Rational(1, 10));
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(Rational::parse("1e-6") == Rational(1, 1000000));
    CHECK(Rational::parse("2.5E+3") == Rational(2500));
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("-0") == Rational(0));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse(".5") == Rational(1, 2));
}

TEST_CASE("malformed literals are rejected") {
    for (const char* bad : {"", "abc", "1.2.3", "1e", "--1", "1/", "0x10", "nan", "inf", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), nnequiv::ParseError);
    }
}

TEST_CASE("0.1 + 0.2 is exactly 0.3") {
    CHECK(Rational::parse("0.1") + Rational::parse("0.2") == Rational::parse("0.3"));
}

TEST_CASE("arithmetic and ordering") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(b < a);
    CHECK(Rational(-2) < Rational(-1, 2));
    CHECK((-a).abs() == a);
    CHECK(Rational(4, 2).is_integer());
    CHECK_THROWS_AS(a / Rational(0), nnequiv::RangeError);
    CHECK_THROWS_AS(Rational::parse("1/0"), nnequiv::RangeError);
}

TEST_CASE("canonical text forms") {
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, 3).to_string() == "-2");
    CHECK(Rational(1, 8).to_exact_decimal() == std::optional<std::string>("0.125"));
    CHECK(Rational(-5).to_exact_decimal() == std::optional<std::string>("-5"));
    CHECK_FALSE(Rational(1, 3).to_exact_decimal().has_value());
    CHECK(Rational(2, 3).to_decimal(3) == "0.667");
    CHECK(Rational(-2, 3).to_decimal(3) == "-0.667");
    CHECK(Rational(1, 2).to_decimal(0) == "1");
    CHECK(Rational::parse(Rational(-22, 7).to_string()) == Rational(-22, 7));
}

TEST_CASE("large magnitudes stay exact") {
    Rational x = Rational::parse("1e-30");
    Rational y = Rational::parse("1e30");
    CHECK(x * y == Rational(1));
    CHECK(Rational::from_parts("123456789012345678901234567890", "10").to_string() ==
          "12345678901234567890123456789");
}
