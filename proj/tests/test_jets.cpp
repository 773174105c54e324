#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

#include "cayley/jets.hpp"
#include "cayley/sampling.hpp"

using namespace cayley;

namespace {

// Independent Taylor oracle for the chart ratios: rational functions held as
// numerator/denominator polynomial pairs, differentiated by the quotient rule.
// No series division or reversion is involved.
struct RationalFunction {
    Poly num, den;

    RationalFunction derivative() const {
        return {num.derivative() * den - num * den.derivative(), den * den};
    }
    Rational at_zero() const {
        REQUIRE(den[0] != 0);
        return num[0] / den[0];
    }
};

Rational taylor_coefficient(RationalFunction f, int k) {
    Rational factorial = 1;
    for (int i = 1; i <= k; ++i) {
        f = f.derivative();
        factorial *= i;
    }
    return f.at_zero() / factorial;
}

Series series_from_strings(const std::vector<const char*>& coeffs) {
    Series s(static_cast<int>(coeffs.size()) - 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s[static_cast<int>(k)] = parse_rational(coeffs[k]);
    return s;
}

void check_series(const Series& got, const std::vector<const char*>& want) {
    Series w = series_from_strings(want);
    REQUIRE(got.order() >= w.order());
    for (int k = 0; k <= w.order(); ++k) {
        CAPTURE(k);
        CHECK(got[k] == w[k]);
    }
}

}  // namespace

TEST_CASE("curve jets at U match the frozen expansions") {
    // computed with an independent exact implementation of the same
    // construction; the asymptotic case also matches the closed forms
    // y1 = (2/3)s^2 + (2 alpha/27)s^4 + ..., y0 = (2/9)s^3 + ...
    Jet j520 = curve_jet_at_U(CubicParams(5, 2, 0));
    check_series(j520.comp[0], {"0", "0", "0", "2/9", "0", "10/27", "0", "50/81"});
    check_series(j520.comp[1], {"0", "0", "2/3", "0", "10/27", "0", "50/243", "0"});

    Jet j010 = curve_jet_at_U(CubicParams(0, 1, 0));
    check_series(j010.comp[0], {"0", "0", "0", "4/9", "0", "0", "0", "0"});
    check_series(j010.comp[1], {"0", "0", "2/3", "0", "0", "0", "0", "0"});

    Jet j110 = curve_jet_at_U(CubicParams(1, 1, 0));
    check_series(j110.comp[0], {"0", "0", "0", "4/9", "0", "0", "0", "-16/243"});
    check_series(j110.comp[1], {"0", "0", "2/3", "0", "-4/27", "0", "-16/243", "0"});

    Jet jgen = curve_jet_at_U(CubicParams(-5, Rational(7, 3), Rational(1, 2)));
    check_series(jgen.comp[0], {"0", "0", "0", "28/243", "112/729", "-308/6561",
                                "-58604/177147", "-77735/531441"});
    check_series(jgen.comp[1], {"0", "0", "14/27", "70/243", "-511/2187", "-8771/19683",
                                "11039/59049", "471548/531441"});

    Jet j320 = curve_jet_at_U(CubicParams(1, Rational(3, 2), 0));
    check_series(j320.comp[0], {"0", "0", "0", "3/8", "0", "3/32", "0", "0"});
    check_series(j320.comp[1], {"0", "0", "3/4", "0", "0", "0", "-3/64", "0"});
}

TEST_CASE("jet structure: chart, basepoint, graph component") {
    RationalSampler s(51, 6);
    for (int i = 0; i < 10; ++i) {
        CubicParams p = s.next_params();
        Jet jet = curve_jet_at_U(p);
        CHECK(jet.kind == BaseKind::Point);
        CHECK(jet.chart == 3);
        CHECK(detail::proportional(jet.basepoint, point_U().coords));
        for (int k = 0; k <= jet.order(); ++k)
            CHECK(jet.comp[2][k] == (k == 1 ? 1 : 0));  // graph form
        CHECK(jet.comp[0][1] == 0);
        CHECK(jet.comp[1][1] == 0);  // tangent direction is t
    }
}

TEST_CASE("chart ratio series agree with the derivative-based Taylor oracle") {
    RationalSampler s(52, 6);
    for (int i = 0; i < 8; ++i) {
        CubicParams p = s.next_params();
        auto xv = curve_polys_at_infinity(p);
        for (int comp = 0; comp < 3; ++comp) {
            Series lib = divide(Series::from_poly(xv[comp], 6), Series::from_poly(xv[3], 6));
            RationalFunction f{xv[comp], xv[3]};
            for (int k = 0; k <= 6; ++k) {
                CAPTURE(i, comp, k);
                CHECK(lib[k] == taylor_coefficient(f, k));
            }
        }
    }
}

TEST_CASE("jet normal form coefficients") {
    RationalSampler s(53, 6);
    for (int i = 0; i < 20; ++i) {
        CubicParams p = s.next_params();
        Jet jet = curve_jet_at_U(p);
        Rational curv = p.beta * (3 - p.beta) / 2;
        CHECK(jet.comp[1][2] == Rational(2, 3) * curv);  // s^2 coefficient of y1
        CHECK(jet.comp[0][2] == 0);
        if (p.gamma == 0)
            CHECK(jet.comp[0][3] == p.beta * (3 - p.beta) * (3 - p.beta) / 9);
    }
}

TEST_CASE("osculating planes") {
    CHECK(proj_eq(osculating_plane(CubicParams(0, 1, 0), 0), HPlane(0, 0, 0, 1)));

    RationalSampler s(54, 6);
    for (int i = 0; i < 15; ++i) {
        CubicParams p = s.next_params();
        CHECK(proj_eq(osculating_plane_at_infinity(p), plane_omega()));
        Rational u = s.next();
        HPlane h = osculating_plane(p, u);
        CHECK(incident(curve_point(p, u), h));
    }
}

TEST_CASE("dual curve polynomials evaluate to the osculating planes") {
    RationalSampler s(55, 6);
    for (int i = 0; i < 10; ++i) {
        CubicParams p = s.next_params();
        auto h = dual_curve_polys(p);
        for (const Rational& u : s.next_distinct(3)) {
            HPlane direct = osculating_plane(p, u);
            HPlane via_polys(Vec4{h[0].eval(u), h[1].eval(u), h[2].eval(u), h[3].eval(u)});
            CHECK(proj_eq(direct, via_polys));
        }
    }
}

TEST_CASE("dual jets at omega match the frozen expansions") {
    Jet d010 = dual_jet_at_omega(CubicParams(0, 1, 0));
    CHECK(d010.kind == BaseKind::Plane);
    CHECK(d010.chart == 0);
    CHECK(detail::proportional(d010.basepoint, plane_omega().coeffs));
    check_series(d010.comp[1], {"0", "0", "1/3", "0", "0", "0", "0", "0"});
    check_series(d010.comp[2], {"0", "0", "0", "1/18", "0", "0", "0", "0"});

    Jet d110 = dual_jet_at_omega(CubicParams(1, 1, 0));
    check_series(d110.comp[1], {"0", "0", "1/3", "0", "-2/27", "0", "31/972", "0"});
    check_series(d110.comp[2], {"0", "0", "0", "1/18", "0", "-1/36", "0", "4/243"});

    // shared dual tangent: the linear term lives only in the graph component,
    // i.e. the tangent of every dual curve is the pencil of planes through t
    RationalSampler s(56, 6);
    for (int i = 0; i < 10; ++i) {
        Jet d = dual_jet_at_omega(s.next_params());
        for (int k = 0; k <= d.order(); ++k)
            CHECK(d.comp[0][k] == (k == 1 ? 1 : 0));
        CHECK(d.comp[1][1] == 0);
        CHECK(d.comp[2][1] == 0);
    }
}

TEST_CASE("dual frame recovery for the beta = 7/3 subfamily") {
    CHECK(dual_params_in_reversed_frame(CubicParams(1, Rational(7, 3), 0)) ==
          CubicParams(Rational(-2, 3), Rational(3, 2), 0));
    CHECK(dual_params_in_reversed_frame(CubicParams(2, Rational(7, 3), 0)) ==
          CubicParams(Rational(-4, 3), Rational(3, 2), 0));
    CHECK(dual_params_in_reversed_frame(CubicParams(-3, Rational(7, 3), 0)) ==
          CubicParams(2, Rational(3, 2), 0));
    CHECK_THROWS_AS(dual_params_in_reversed_frame(CubicParams(1, 2, 0)), error);
    CHECK_THROWS_AS(dual_params_in_reversed_frame(CubicParams(1, Rational(7, 3), 1)), error);
}

TEST_CASE("jet validation") {
    CHECK_THROWS_AS(curve_jet_at_U(CubicParams(0, 1, 0), 5), error);  // too short

    Series ok(7), lin(7);
    lin[1] = 1;
    CHECK_THROWS_AS(Jet(BaseKind::Point, 3, point_U().coords, {ok, ok, ok}), error);  // irregular
    Series off(7);
    off[0] = 1;
    CHECK_THROWS_AS(Jet(BaseKind::Point, 3, point_U().coords, {off, lin, ok}), error);
}
