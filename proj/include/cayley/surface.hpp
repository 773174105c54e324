#pragma once

// The ruled cubic surface F: 3 x0 x1 x2 - x1^3 - 3 x3 x0^2 = 0, its
// distinguished flag (U, t, omega), the point orbits, and the residual
// generators cut out by the plane pencil through t.

#include <string_view>
#include <utility>

#include "cayley/projective.hpp"
#include "cayley/rational.hpp"

namespace cayley {

/// Value of the defining cubic form at the given representative. Vanishing is
/// representative-independent (the form is homogeneous of degree 3).
inline Rational cayley_eval(const HPoint& p) {
    const Vec4& x = p.coords;
    return 3 * x[0] * x[1] * x[2] - x[1] * x[1] * x[1] - 3 * x[3] * x[0] * x[0];
}

enum class SurfaceOrbit { AffineSurfacePoint, TMinusU, UPoint, NotOnSurface };

inline std::string_view to_string(SurfaceOrbit o) {
    switch (o) {
        case SurfaceOrbit::AffineSurfacePoint: return "AffineSurfacePoint";
        case SurfaceOrbit::TMinusU: return "TMinusU";
        case SurfaceOrbit::UPoint: return "UPoint";
        case SurfaceOrbit::NotOnSurface: return "NotOnSurface";
    }
    return "?";
}

/// Orbit of a point under the collineation group of F. The plane at infinity
/// meets F at t only, so on-surface points with x0 = 0 also have x1 = 0.
inline SurfaceOrbit orbit_of(const HPoint& p) {
    if (cayley_eval(p) != 0) return SurfaceOrbit::NotOnSurface;
    if (p[0] != 0) return SurfaceOrbit::AffineSurfacePoint;
    return p[2] == 0 ? SurfaceOrbit::UPoint : SurfaceOrbit::TMinusU;
}

/// The absolute flag: cuspidal point U on the torsal generator t inside the
/// plane at infinity omega.
struct Flag {
    HPoint u;
    std::pair<HPoint, HPoint> t;
    HPlane omega;
};

inline const Flag& standard_flag() {
    static const Flag flag{
        HPoint(0, 0, 0, 1),
        {HPoint(0, 0, 1, 0), HPoint(0, 0, 0, 1)},
        HPlane(1, 0, 0, 0),
    };
    return flag;
}

inline const HPoint& point_U() { return standard_flag().u; }
inline const HPlane& plane_omega() { return standard_flag().omega; }

/// The plane x1 = m x0 of the pencil through t (every member except omega)
/// meets F residually along a generator; that line is returned as the
/// intersection of the pencil plane with 3m x2 - m^3 x0 - 3 x3 = 0.
inline std::pair<HPlane, HPlane> residual_generator(const Rational& m) {
    HPlane pencil(-m, 1, 0, 0);
    HPlane second(-(m * m * m), 0, 3 * m, -3);
    return {std::move(pencil), std::move(second)};
}

/// Two spanning points of the residual generator: an affine point and the
/// point (0,0,1,m) where the generator meets t.
inline std::pair<HPoint, HPoint> residual_generator_points(const Rational& m) {
    HPoint affine(1, m, 0, -(m * m * m) / 3);
    HPoint on_t(0, 0, 1, m);
    return {std::move(affine), std::move(on_t)};
}

}  // namespace cayley
