#pragma once

// The three-parameter collineation group G fixing the surface F, presented by
// lower-triangular matrices M_{a,b,c}, together with its action on the
// parameters of the cubic-parabola family.

#include <string>
#include <string_view>

#include "cayley/error.hpp"
#include "cayley/params.hpp"
#include "cayley/projective.hpp"
#include "cayley/rational.hpp"

namespace cayley {

struct GroupElem {
    Rational a, b, c;

    GroupElem(Rational a_, Rational b_, Rational c_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        detail::require(c != 0, errc::invalid_group_element,
                        "group element requires c != 0");
    }

    friend bool operator==(const GroupElem&, const GroupElem&) = default;
};

inline GroupElem group_identity() { return GroupElem(0, 0, 1); }

inline Collineation group_matrix(const GroupElem& g) {
    const Rational &a = g.a, &b = g.b, &c = g.c;
    Mat4 m{Vec4{1, 0, 0, 0},
           Vec4{a, c, 0, 0},
           Vec4{b, a * c, c * c, 0},
           Vec4{a * b - a * a * a / 3, b * c, a * c * c, c * c * c}};
    return Collineation(std::move(m));
}

/// Parameters of the matrix product, read off the fixed entry positions
/// (1,0), (2,0), (1,1) of the lower-triangular form.
inline GroupElem group_compose(const GroupElem& g1, const GroupElem& g2) {
    Mat4 prod = detail::mul4(group_matrix(g1).matrix(), group_matrix(g2).matrix());
    return GroupElem(prod[1][0], prod[2][0], prod[1][1]);
}

inline GroupElem group_inverse(const GroupElem& g) {
    // solves compose(g, inv) = identity
    return GroupElem(-g.a / g.c, (g.a * g.a - g.b) / (g.c * g.c), 1 / g.c);
}

/// Parameter transport: the image of the curve with parameters P under the
/// collineation of g is the family curve with these parameters.
inline CubicParams act_on_params(const GroupElem& g, const CubicParams& p) {
    const Rational &a = g.a, &b = g.b, &c = g.c;
    const Rational &alpha = p.alpha, &beta = p.beta, &gamma = p.gamma;
    Rational alpha_bar = -a * a * beta * beta / 4 - a * c * beta * gamma + c * c * alpha + b * beta;
    Rational gamma_bar = a * (beta - 2) / 2 + c * gamma;
    return CubicParams(std::move(alpha_bar), beta, std::move(gamma_bar));
}

/// Conical curvature beta (3 - beta) / 2 of a family curve in the flag-space
/// sense; maximal value 9/8, attained exactly at beta = 3/2.
inline Rational conical_curvature(const Rational& beta) {
    detail::require(beta != 0 && beta != 3, errc::invalid_parameter,
                    "conical curvature requires beta outside {0, 3}");
    return beta * (3 - beta) / 2;
}

inline GroupElem parse_group_elem(std::string_view text) {
    auto v = parse_rational_list(text, 3);
    return GroupElem(v[0], v[1], v[2]);
}

inline std::string to_string(const GroupElem& g) {
    return to_string(g.a) + "," + to_string(g.b) + "," + to_string(g.c);
}

}  // namespace cayley
