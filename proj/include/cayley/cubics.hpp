#pragma once

// The three-parameter family of cubic parabolas on F, the beta = 3 plane
// parabolas, the parabolic carrier cylinder, central projection from U, and
// exact recovery of parameters from sampled points.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/params.hpp"
#include "cayley/projective.hpp"
#include "cayley/surface.hpp"

namespace cayley {

/// Point of the cubic parabola c_{alpha,beta,gamma} at finite parameter u:
/// (1, u-g, (u^2+a)/b, ((u-g)/(3b)) (3(u^2+a) - b(u-g)^2)).
inline HPoint curve_point(const CubicParams& p, const Rational& u) {
    const Rational &a = p.alpha, &b = p.beta, &g = p.gamma;
    Rational w = u - g;
    Rational q = u * u + a;
    return HPoint(1, w, q / b, (w / (3 * b)) * (3 * q - b * w * w));
}

/// The parameter value u = infinity; every family curve passes through U.
inline HPoint curve_point_at_infinity(const CubicParams&) { return point_U(); }

/// Quadratic form of the parabolic cylinder carrying the curve:
/// alpha x0^2 - beta x0 x2 + (x1 + gamma x0)^2, with vertex U.
inline Rational cylinder_eval(const CubicParams& p, const HPoint& x) {
    const Vec4& v = x.coords;
    Rational lin = v[1] + p.gamma * v[0];
    return p.alpha * v[0] * v[0] - p.beta * v[0] * v[2] + lin * lin;
}

/// beta = 3 member: a plane parabola on F, contained in a tangent plane of F.
inline HPoint parabola_point(const ParabolaParams& q, const Rational& u) {
    const Rational &a = q.alpha, &g = q.gamma;
    Rational w = u - g;
    return HPoint(1, w, (u * u + a) / 3, (w / 3) * (a + 2 * u * g - g * g));
}

inline HPoint parabola_point_at_infinity(const ParabolaParams&) { return point_U(); }

/// Supporting plane of the beta = 3 parabola, fitted through three of its
/// points and checked against a fourth.
inline HPlane plane_of_parabola(const ParabolaParams& q) {
    HPlane h = plane_through(parabola_point(q, 0), parabola_point(q, 1),
                             parabola_point(q, -1));
    detail::require(incident(parabola_point(q, 2), h), errc::internal,
                    "beta = 3 parabola is not planar");
    return h;
}

struct PlanarPoint {
    std::array<Rational, 3> coords;

    explicit PlanarPoint(std::array<Rational, 3> c) : coords(std::move(c)) {
        bool zero = coords[0] == 0 && coords[1] == 0 && coords[2] == 0;
        detail::require(!zero, errc::invalid_object,
                        "planar point must be a nonzero 3-vector");
    }
    PlanarPoint(Rational x0, Rational x1, Rational x2)
        : PlanarPoint(std::array<Rational, 3>{std::move(x0), std::move(x1), std::move(x2)}) {}

    const Rational& operator[](std::size_t i) const { return coords[i]; }
};

inline bool proj_eq(const PlanarPoint& p, const PlanarPoint& q) {
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (p[i] * q[j] != p[j] * q[i]) return false;
    return true;
}

/// Central projection from U onto the plane x3 = 0.
inline PlanarPoint project_from_U(const HPoint& p) {
    detail::require(!proj_eq(p, point_U()), errc::projection_center,
                    "cannot project the center U");
    return PlanarPoint(p[0], p[1], p[2]);
}

/// Ternary quadratic form c0 x0^2 + c1 x1^2 + c2 x2^2 + c3 x0x1 + c4 x0x2 + c5 x1x2.
struct Conic {
    std::array<Rational, 6> c;

    const Rational& operator[](std::size_t i) const { return c[i]; }
};

inline Rational conic_eval(const Conic& q, const PlanarPoint& p) {
    const auto& x = p.coords;
    return q[0] * x[0] * x[0] + q[1] * x[1] * x[1] + q[2] * x[2] * x[2] +
           q[3] * x[0] * x[1] + q[4] * x[0] * x[2] + q[5] * x[1] * x[2];
}

inline bool proj_eq(const Conic& a, const Conic& b) {
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

/// Image of the family curve under projection from U: the cylinder form read
/// as a conic in (x0, x1, x2).
inline Conic projected_conic(const CubicParams& p) {
    return Conic{{p.alpha + p.gamma * p.gamma, 1, 0, 2 * p.gamma, -p.beta, 0}};
}

/// Recover (alpha, beta, gamma) from >= 3 affine sample points of one family
/// curve by the exact linear solve of the linearized cylinder equation
/// p x0^2 - q x0 x2 + x1^2 + r x0 x1 = 0 with p = alpha + gamma^2, q = beta,
/// r = 2 gamma.
inline CubicParams identify_params(std::span<const HPoint> points) {
    std::vector<const HPoint*> distinct;
    for (const HPoint& pt : points) {
        detail::require(pt[0] != 0, errc::invalid_object,
                        "identify_params requires affine points (x0 != 0)");
        bool seen = false;
        for (const HPoint* q : distinct)
            if (proj_eq(*q, pt)) { seen = true; break; }
        if (!seen) distinct.push_back(&pt);
    }
    detail::require(distinct.size() >= 3, errc::insufficient_data,
                    "identify_params needs at least 3 distinct points");

    // rows [x0^2, x0 x1, -x0 x2 | -x1^2] over unknowns (p, r, q)
    std::vector<std::array<Rational, 4>> m;
    m.reserve(distinct.size());
    for (const HPoint* pt : distinct) {
        const Vec4& x = pt->coords;
        m.push_back({x[0] * x[0], x[0] * x[1], -(x[0] * x[2]), -(x[1] * x[1])});
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < 3 && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        Rational d = m[rank][col];
        for (auto& e : m[rank]) e /= d;
        for (std::size_t row = 0; row < m.size(); ++row) {
            if (row == rank || m[row][col] == 0) continue;
            Rational f = m[row][col];
            for (std::size_t j = 0; j < 4; ++j) m[row][j] -= f * m[rank][j];
        }
        ++rank;
    }
    for (std::size_t row = rank; row < m.size(); ++row)
        detail::require(m[row][3] == 0, errc::inconsistent_input,
                        "sample points do not lie on a common parabolic cylinder");
    detail::require(rank == 3, errc::insufficient_data,
                    "sample points leave the cylinder fit underdetermined");

    Rational p = m[0][3], r = m[1][3], q = m[2][3];
    detail::require(q != 0 && q != 3, errc::not_in_family,
                    "fitted cylinder has beta = " + to_string(q) +
                        "; not a twisted-cubic family member");
    CubicParams result(p - r * r / 4, q, r / 2);
    for (const HPoint* pt : distinct)
        detail::require(cylinder_eval(result, *pt) == 0, errc::internal,
                        "cylinder fit failed verification");
    return result;
}

}  // namespace cayley
