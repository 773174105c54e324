#include <catch2/catch_amalgamated.hpp>

#include "cayley/cubics.hpp"
#include "cayley/group.hpp"
#include "cayley/sampling.hpp"
#include "cayley/surface.hpp"

using namespace cayley;

TEST_CASE("surface form values") {
    CHECK(cayley_eval(HPoint(0, 0, 0, 1)) == 0);
    CHECK(cayley_eval(HPoint(1, 1, 1, Rational(2, 3))) == 0);
    CHECK(cayley_eval(HPoint(1, 1, 1, 0)) == 2);
}

TEST_CASE("orbit classification") {
    CHECK(orbit_of(HPoint(0, 0, 0, 1)) == SurfaceOrbit::UPoint);
    CHECK(orbit_of(HPoint(0, 0, 1, 7)) == SurfaceOrbit::TMinusU);
    CHECK(orbit_of(HPoint(1, 1, 1, Rational(2, 3))) == SurfaceOrbit::AffineSurfacePoint);
    CHECK(orbit_of(HPoint(1, 1, 1, 0)) == SurfaceOrbit::NotOnSurface);
    CHECK(orbit_of(HPoint(0, 1, 0, 0)) == SurfaceOrbit::NotOnSurface);  // omega meets F at t only
}

TEST_CASE("flag incidences") {
    const Flag& flag = standard_flag();
    CHECK(incident(flag.u, flag.omega));
    CHECK(incident(flag.t.first, flag.omega));
    CHECK(incident(flag.t.second, flag.omega));
    CHECK(proj_eq(flag.t.second, flag.u));  // U spans t together with (0,0,1,0)
}

TEST_CASE("residual generators lie on F, meet t, and avoid U") {
    RationalSampler s(21, 8);
    for (int i = 0; i < 20; ++i) {
        Rational m = s.next();
        auto [pencil, second] = residual_generator(m);
        auto [affine, on_t] = residual_generator_points(m);

        // the named planes really cut the generator
        for (const HPoint* p : {&affine, &on_t}) {
            CHECK(incident(*p, pencil));
            CHECK(incident(*p, second));
            CHECK(cayley_eval(*p) == 0);
        }
        CHECK(proj_eq(on_t, HPoint(0, 0, 1, m)));
        CHECK_FALSE(incident(point_U(), second));

        // a generic point of the generator stays on F
        Rational t = s.next();
        HPoint general(1, m, t, m * t - m * m * m / 3);
        CHECK(incident(general, pencil));
        CHECK(incident(general, second));
        CHECK(cayley_eval(general) == 0);
    }

    SECTION("m = 0 specializes to the stated plane pair") {
        auto [pencil, second] = residual_generator(0);
        CHECK(proj_eq(pencil, HPlane(0, 1, 0, 0)));
        CHECK(proj_eq(second, HPlane(0, 0, 0, 1)));
    }
}

TEST_CASE("group matrices match the closed form") {
    CHECK(proj_eq(group_matrix(group_identity()), Collineation::identity()));

    Collineation m101 = group_matrix(GroupElem(1, 0, 1));
    Mat4 want{Vec4{1, 0, 0, 0}, Vec4{1, 1, 0, 0}, Vec4{0, 1, 1, 0},
              Vec4{Rational(-1, 3), 0, 1, 1}};
    CHECK(proj_eq(m101, Collineation(want)));
    CHECK(proj_eq(apply_point(m101, HPoint(1, 0, 0, 0)), HPoint(1, 1, 0, Rational(-1, 3))));

    Collineation m002 = group_matrix(GroupElem(0, 0, 2));
    Mat4 diag{};
    diag[0][0] = 1; diag[1][1] = 2; diag[2][2] = 4; diag[3][3] = 8;
    CHECK(proj_eq(m002, Collineation(diag)));

    CHECK_THROWS_AS(GroupElem(1, 1, 0), error);
}

TEST_CASE("composition follows the matrix product") {
    CHECK(group_compose(GroupElem(1, 0, 1), GroupElem(1, 0, 1)) == GroupElem(2, 1, 1));

    RationalSampler s(22, 5);
    for (int i = 0; i < 30; ++i) {
        GroupElem g1 = s.next_group_elem();
        GroupElem g2 = s.next_group_elem();
        // parameter read-back must reproduce the full product matrix
        CHECK(proj_eq(group_matrix(group_compose(g1, g2)), group_matrix(g1) * group_matrix(g2)));
        CHECK(group_compose(group_identity(), g1) == g1);
        CHECK(group_compose(g1, group_inverse(g1)) == group_identity());
        CHECK(group_compose(group_inverse(g1), g1) == group_identity());
    }
}

TEST_CASE("the group preserves the surface, the flag, and the orbits") {
    RationalSampler s(23, 5);
    for (int i = 0; i < 25; ++i) {
        GroupElem g = s.next_group_elem();
        Collineation m = group_matrix(g);
        CubicParams p = s.next_params();

        HPoint affine = curve_point(p, s.next());
        CHECK(orbit_of(affine) == SurfaceOrbit::AffineSurfacePoint);
        CHECK(orbit_of(apply_point(m, affine)) == SurfaceOrbit::AffineSurfacePoint);

        HPoint on_t(0, 0, 1, s.next());
        CHECK(orbit_of(apply_point(m, on_t)) == SurfaceOrbit::TMinusU);
        CHECK(proj_eq(apply_point(m, point_U()), point_U()));
        CHECK(proj_eq(apply_plane(m, plane_omega()), plane_omega()));

        HPoint off(1, 1, 1, 0);
        CHECK(orbit_of(apply_point(m, off)) == SurfaceOrbit::NotOnSurface);
    }
}

TEST_CASE("parameter transport examples and laws") {
    CubicParams p020(0, 2, 0);
    CHECK(act_on_params(group_identity(), p020) == p020);
    CHECK(act_on_params(GroupElem(0, 1, 1), p020) == CubicParams(2, 2, 0));
    CHECK(act_on_params(GroupElem(1, 0, 1), p020) == CubicParams(-1, 2, 0));

    RationalSampler s(24, 5);
    for (int i = 0; i < 30; ++i) {
        GroupElem g1 = s.next_group_elem();
        GroupElem g2 = s.next_group_elem();
        CubicParams p = s.next_params();
        CHECK(act_on_params(group_compose(g1, g2), p) ==
              act_on_params(g1, act_on_params(g2, p)));
        CHECK(act_on_params(g1, p).beta == p.beta);
    }
}

TEST_CASE("transported parameters describe the image curve pointwise") {
    // decisive sign check on the transport formulas: the image of a curve
    // point must land on the transported curve itself
    RationalSampler s(25, 5);
    for (int i = 0; i < 25; ++i) {
        GroupElem g = s.next_group_elem();
        CubicParams p = s.next_params();
        CubicParams moved = act_on_params(g, p);
        Collineation m = group_matrix(g);
        for (const Rational& u : s.next_distinct(4)) {
            HPoint image = apply_point(m, curve_point(p, u));
            CHECK(cayley_eval(image) == 0);
            CHECK(cylinder_eval(moved, image) == 0);
            Rational u_bar = g.c * u + g.a * p.beta / 2;
            CHECK(proj_eq(image, curve_point(moved, u_bar)));
        }
    }
}

TEST_CASE("conical curvature") {
    CHECK(conical_curvature(Rational(3, 2)) == Rational(9, 8));
    CHECK(conical_curvature(2) == 1);
    CHECK(conical_curvature(1) == conical_curvature(2));  // beta <-> 3 - beta symmetry
    CHECK_THROWS_AS(conical_curvature(0), error);
    CHECK_THROWS_AS(conical_curvature(3), error);

    // grid extremum
    for (int k = -24; k <= 60; ++k) {
        if (k == 0 || k == 36) continue;
        Rational beta(k, 12);
        Rational v = conical_curvature(beta);
        CHECK(v <= Rational(9, 8));
        CHECK((v == Rational(9, 8)) == (beta == Rational(3, 2)));
    }
}
