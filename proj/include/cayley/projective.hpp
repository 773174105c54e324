#pragma once

// Primitive objects of real projective 3-space over the rationals: points and
// planes as nonzero homogeneous 4-vectors modulo scale, and collineations as
// invertible 4x4 matrices modulo scale.

#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/rational.hpp"

namespace cayley {

using Vec4 = std::array<Rational, 4>;
using Mat4 = std::array<Vec4, 4>;

namespace detail {

inline bool is_zero_vec(const Vec4& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// q == lambda * p for some nonzero lambda, i.e. all 2x2 minors vanish.
inline bool proportional(const Vec4& p, const Vec4& q) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (p[i] * q[j] != p[j] * q[i]) return false;
    return true;
}

inline Rational dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

}  // namespace detail

/// Canonical representative of a homogeneous vector: integer entries with
/// gcd 1 and the first nonzero entry positive. Used for printing and hashing;
/// never required for correctness of the exact predicates.
inline Vec4 canonical(Vec4 v) {
    Integer lcm_den = 1;
    for (const auto& x : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator_of(x));
    Integer gcd_num = 0;
    std::array<Integer, 4> scaled;
    for (std::size_t i = 0; i < 4; ++i) {
        scaled[i] = numerator_of(v[i]) * (lcm_den / denominator_of(v[i]));
        gcd_num = boost::multiprecision::gcd(gcd_num, scaled[i]);
    }
    if (gcd_num == 0) gcd_num = 1;
    int sign = 0;
    for (const auto& n : scaled) {
        if (n != 0) {
            sign = n > 0 ? 1 : -1;
            break;
        }
    }
    if (sign == 0) sign = 1;
    for (std::size_t i = 0; i < 4; ++i) v[i] = Rational(scaled[i] * sign / gcd_num);
    return v;
}

struct HPoint {
    Vec4 coords;

    explicit HPoint(Vec4 c) : coords(std::move(c)) {
        detail::require(!detail::is_zero_vec(coords), errc::invalid_object,
                        "projective point must be a nonzero 4-vector");
    }
    HPoint(Rational x0, Rational x1, Rational x2, Rational x3)
        : HPoint(Vec4{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}) {}

    const Rational& operator[](std::size_t i) const { return coords[i]; }
};

struct HPlane {
    Vec4 coeffs;

    explicit HPlane(Vec4 c) : coeffs(std::move(c)) {
        detail::require(!detail::is_zero_vec(coeffs), errc::invalid_object,
                        "projective plane must be a nonzero 4-vector");
    }
    HPlane(Rational x0, Rational x1, Rational x2, Rational x3)
        : HPlane(Vec4{std::move(x0), std::move(x1), std::move(x2), std::move(x3)}) {}

    const Rational& operator[](std::size_t i) const { return coeffs[i]; }
};

inline bool proj_eq(const HPoint& p, const HPoint& q) {
    return detail::proportional(p.coords, q.coords);
}
inline bool proj_eq(const HPlane& g, const HPlane& h) {
    return detail::proportional(g.coeffs, h.coeffs);
}

/// Exact incidence test: sum of coefficient-coordinate products is zero.
inline bool incident(const HPoint& p, const HPlane& h) {
    return detail::dot(p.coords, h.coeffs) == 0;
}

/// Unique plane through three projectively distinct, non-collinear points,
/// by signed 3x3 minors of the stacked 3x4 matrix.
inline HPlane plane_through(const HPoint& p1, const HPoint& p2, const HPoint& p3) {
    const Vec4& a = p1.coords;
    const Vec4& b = p2.coords;
    const Vec4& c = p3.coords;
    auto det3 = [&](std::size_t i, std::size_t j, std::size_t k) {
        return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
               a[k] * (b[i] * c[j] - b[j] * c[i]);
    };
    Vec4 h{det3(1, 2, 3), -det3(0, 2, 3), det3(0, 1, 3), -det3(0, 1, 2)};
    detail::require(!detail::is_zero_vec(h), errc::degenerate_span,
                    "plane_through requires three non-collinear points");
    return HPlane(std::move(h));
}

namespace detail {

inline Rational det4(Mat4 m) {
    // fraction-free enough for 4x4: plain Gaussian elimination over Q
    Rational det = 1;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        while (pivot < 4 && m[pivot][col] == 0) ++pivot;
        if (pivot == 4) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < 4; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < 4; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

inline Mat4 invert4(Mat4 m) {
    Mat4 inv{};
    for (std::size_t i = 0; i < 4; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t pivot = col;
        while (pivot < 4 && m[pivot][col] == 0) ++pivot;
        require(pivot < 4, errc::invalid_object, "matrix is singular");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational d = m[col][col];
        for (std::size_t j = 0; j < 4; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < 4; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col];
            for (std::size_t j = 0; j < 4; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline Mat4 mul4(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < 4; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace detail

/// Invertible 4x4 rational matrix modulo scale, acting on points by
/// multiplication and on planes contragradiently.
class Collineation {
public:
    explicit Collineation(Mat4 m) : m_(std::move(m)) {
        detail::require(detail::det4(m_) != 0, errc::invalid_object,
                        "collineation matrix must be invertible");
    }

    static Collineation identity() {
        Mat4 m{};
        for (std::size_t i = 0; i < 4; ++i) m[i][i] = 1;
        return Collineation(std::move(m));
    }

    const Mat4& matrix() const { return m_; }

    Collineation inverse() const { return Collineation(detail::invert4(m_)); }

    friend Collineation operator*(const Collineation& a, const Collineation& b) {
        return Collineation(detail::mul4(a.m_, b.m_));
    }

private:
    Mat4 m_;
};

inline bool proj_eq(const Collineation& a, const Collineation& b) {
    const Mat4 &ma = a.matrix(), &mb = b.matrix();
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = i + 1; j < 16; ++j)
            if (ma[i / 4][i % 4] * mb[j / 4][j % 4] != ma[j / 4][j % 4] * mb[i / 4][i % 4])
                return false;
    return true;
}

inline HPoint apply_point(const Collineation& m, const HPoint& p) {
    Vec4 out{};
    for (std::size_t i = 0; i < 4; ++i) out[i] = detail::dot(m.matrix()[i], p.coords);
    return HPoint(std::move(out));
}

/// Image plane H . M^{-1}, so incidence is preserved:
/// p in H  <=>  apply_point(M, p) in apply_plane(M, H).
inline HPlane apply_plane(const Collineation& m, const HPlane& h) {
    Mat4 inv = detail::invert4(m.matrix());
    Vec4 out{};
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t i = 0; i < 4; ++i) out[j] += h.coeffs[i] * inv[i][j];
    return HPlane(std::move(out));
}

// ---- text form: comma-separated rational strings ----

inline std::string format_vec4(const Vec4& v) {
    Vec4 c = canonical(v);
    std::string out = to_string(c[0]);
    for (std::size_t i = 1; i < 4; ++i) {
        out += ',';
        out += to_string(c[i]);
    }
    return out;
}

inline std::vector<Rational> parse_rational_list(std::string_view text, std::size_t expected) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    detail::require(out.size() == expected, errc::parse,
                    "expected " + std::to_string(expected) + " comma-separated rationals in '" +
                        std::string(text) + "'");
    return out;
}

inline HPoint parse_hpoint(std::string_view text) {
    auto v = parse_rational_list(text, 4);
    return HPoint(Vec4{v[0], v[1], v[2], v[3]});
}

inline HPlane parse_hplane(std::string_view text) {
    auto v = parse_rational_list(text, 4);
    return HPlane(Vec4{v[0], v[1], v[2], v[3]});
}

inline std::string to_string(const HPoint& p) { return format_vec4(p.coords); }
inline std::string to_string(const HPlane& h) { return format_vec4(h.coeffs); }

}  // namespace cayley
