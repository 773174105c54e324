#pragma once

// Parameter triples naming the curves of the cubic-parabola family, and the
// beta = 3 degeneration (plane parabolas), kept as a separate type so the
// family invariant beta not in {0, 3} is enforced by construction.

#include <string>
#include <string_view>

#include "cayley/error.hpp"
#include "cayley/projective.hpp"
#include "cayley/rational.hpp"

namespace cayley {

struct CubicParams {
    Rational alpha, beta, gamma;

    CubicParams(Rational a, Rational b, Rational g)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
        detail::require(beta != 0 && beta != 3, errc::invalid_parameter,
                        "cubic parabola parameter beta must avoid 0 and 3");
    }

    friend bool operator==(const CubicParams&, const CubicParams&) = default;
};

/// beta = 3 member of the same coordinate formula; a plane parabola, not a
/// twisted cubic.
struct ParabolaParams {
    Rational alpha, gamma;

    friend bool operator==(const ParabolaParams&, const ParabolaParams&) = default;
};

inline CubicParams parse_cubic_params(std::string_view text) {
    auto v = parse_rational_list(text, 3);
    return CubicParams(v[0], v[1], v[2]);
}

inline std::string to_string(const CubicParams& p) {
    return to_string(p.alpha) + "," + to_string(p.beta) + "," + to_string(p.gamma);
}

inline std::string to_string(const ParabolaParams& p) {
    return to_string(p.alpha) + ",3," + to_string(p.gamma);
}

}  // namespace cayley
