#include <catch2/catch_amalgamated.hpp>

#include "cayley/rational.hpp"

using namespace cayley;

TEST_CASE("parsing accepts the documented text forms") {
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-2/3") == Rational(-2, 3));
    CHECK(parse_rational("+7/2") == Rational(7, 2));
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("  4/6 ") == Rational(2, 3));
    CHECK(parse_rational("-0") == 0);
}

TEST_CASE("parsed values are reduced with positive denominator") {
    Rational q = parse_rational("-6/4");
    CHECK(numerator_of(q) == -3);
    CHECK(denominator_of(q) == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(parse_rational("14/7")) == "2");
}

TEST_CASE("malformed literals are rejected") {
    for (const char* bad : {"", "/", "-", "1/", "/2", "1/0", "1/-2", "a", "1.5", "2/3/4", "1 2"}) {
        CAPTURE(bad);
        CHECK_THROWS_MATCHES(parse_rational(bad), error,
                             Catch::Matchers::Predicate<error>(
                                 [](const error& e) { return e.kind() == errc::parse; }));
    }
}

TEST_CASE("arithmetic stays exact on large values") {
    Rational q = parse_rational("123456789123456789123456789/3");
    CHECK(to_string(q) == "41152263041152263041152263");
    Rational third(1, 3);
    Rational sum = third + third + third;
    CHECK(sum == 1);
    CHECK(denominator_of(sum) == 1);
}
