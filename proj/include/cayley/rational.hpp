#pragma once

// Exact scalar type. All arithmetic in this library is carried out over the
// rationals; nothing is ever rounded, so every comparison is an exact identity.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "cayley/error.hpp"

namespace cayley {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator (both maintained by the backing type on every operation).
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return numerator(q); }
inline Integer denominator_of(const Rational& q) { return denominator(q); }

/// Text format: optional sign, decimal integer, optional "/" followed by a
/// positive decimal integer. Examples: "5", "-2/3", "+7/2".
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    detail::require(!s.empty(), errc::parse, "empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    auto digits = [](std::string_view d) {
        if (d.empty()) return false;
        for (char ch : d)
            if (ch < '0' || ch > '9') return false;
        return true;
    };

    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    detail::require(digits(num) && digits(den), errc::parse,
                    "malformed rational literal '" + std::string(text) + "'");

    Integer n{std::string(num)}, d{std::string(den)};
    detail::require(d != 0, errc::parse,
                    "rational denominator must be positive in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(n, d);  // reduces to lowest terms
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace cayley
