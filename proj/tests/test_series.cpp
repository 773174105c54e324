#include <catch2/catch_amalgamated.hpp>

#include "cayley/sampling.hpp"
#include "cayley/series.hpp"

using namespace cayley;

namespace {

Series random_series(RationalSampler& s, int order, bool unit_constant) {
    Series out(order);
    for (int k = 0; k <= order; ++k) out[k] = s.next();
    if (unit_constant)
        while (out[0] == 0) out[0] = s.next();
    return out;
}

}  // namespace

TEST_CASE("polynomial basics") {
    Poly p({1, 2, 3});  // 1 + 2u + 3u^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(2) == 17);
    CHECK(p.derivative().eval(2) == 14);
    CHECK(Poly().degree() == -1);

    Poly q({0, 1});
    CHECK((p * q).degree() == 3);
    CHECK((p * q).eval(3) == p.eval(3) * 3);
    CHECK((p + q).eval(5) == p.eval(5) + 5);
}

TEST_CASE("polynomial reversal clears the pole exactly") {
    Poly p({Rational(-1), 0, Rational(1, 2), 4});  // -1 + u^2/2 + 4u^3
    Poly r = p.reversed(3);
    // v^3 p(1/v) = -v^3 + v/2 + 4
    CHECK(r[0] == 4);
    CHECK(r[1] == Rational(1, 2));
    CHECK(r[2] == 0);
    CHECK(r[3] == -1);
    CHECK_THROWS_AS(p.reversed(2), error);
}

TEST_CASE("series division inverts multiplication") {
    RationalSampler s(41, 5);
    for (int i = 0; i < 20; ++i) {
        Series a = random_series(s, 8, false);
        Series b = random_series(s, 8, true);
        Series q = divide(a, b);
        Series back = q * b;
        for (int k = 0; k <= 8; ++k) CHECK(back[k] == a[k]);
    }
}

TEST_CASE("series composition is associative where defined") {
    RationalSampler s(42, 4);
    for (int i = 0; i < 12; ++i) {
        Series f = random_series(s, 7, false);
        Series g = random_series(s, 7, false);
        Series h = random_series(s, 7, false);
        g[0] = 0;
        h[0] = 0;
        Series left = compose(compose(f, g), h);
        Series right = compose(f, compose(g, h));
        for (int k = 0; k <= 7; ++k) CHECK(left[k] == right[k]);
    }
}

TEST_CASE("reversion is a two-sided compositional inverse") {
    RationalSampler s(43, 5);
    for (int i = 0; i < 15; ++i) {
        Series f = random_series(s, 8, false);
        f[0] = 0;
        while (f[1] == 0) f[1] = s.next();
        Series g = revert(f);
        Series fg = compose(f, g);
        Series gf = compose(g, f);
        for (int k = 0; k <= 8; ++k) {
            CHECK(fg[k] == (k == 1 ? 1 : 0));
            CHECK(gf[k] == (k == 1 ? 1 : 0));
        }
    }
    CHECK_THROWS_AS(revert(Series(6)), error);
}

TEST_CASE("guard rails") {
    Series a(6), b(7);
    CHECK_THROWS_AS(a + b, error);
    Series unit(6);
    CHECK_THROWS_AS(divide(unit, Series(6)), error);  // zero constant term
    Series g(6);
    g[0] = 1;
    CHECK_THROWS_AS(compose(a, g), error);  // g(0) != 0
}
